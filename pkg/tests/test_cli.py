"""Tests voor de CLI via click's CliRunner."""
import json

import numpy as np
import pytest
from click.testing import CliRunner

from main import cli
from src.core.qmat import BipartiteState, apply_ilo
from src.outputs.state_files import write_state_file
from src.states.builders import CanonicalParams, CheckerboardParams, CheckerboardRaw, checkerboard_canonical, omega


def run(*args):
    return CliRunner().invoke(cli, list(args), obj={})


def parse_json(result) -> dict:
    """Eerste JSON-object uit stdout; logregels kunnen ervoor staan."""
    text = result.stdout
    data, _ = json.JSONDecoder().raw_decode(text[text.index("{"):])
    return data


@pytest.fixture
def omega_file(tmp_path):
    path = tmp_path / "omega.json"
    write_state_file(omega(CanonicalParams(1, 2, 3, 4)), path)
    return path


class TestBasics:
    def test_version(self):
        result = run("--version")
        assert result.exit_code == 0
        assert "pptes-rank4" in result.output

    def test_help_lists_commands(self):
        result = run("--help")
        for command in ("construct", "analyze", "equiv", "orbit", "fixed-point", "reduce"):
            assert command in result.output


class TestConstruct:
    def test_omega_to_file(self, tmp_path):
        path = tmp_path / "s.json"
        result = run("construct", "omega", "1", "2", "3", "4", "-o", str(path))
        assert result.exit_code == 0
        data = json.loads(path.read_text())
        assert data["provenance"]["constructor"] == "omega"
        assert len(data["entries"]) == 81

    def test_choi_to_stdout(self):
        result = run("construct", "choi", "0.5")
        assert result.exit_code == 0
        assert parse_json(result)["entries"][20] == [4.0, 0.0]

    def test_normalize(self):
        data = parse_json(run("construct", "upb-tiles", "--normalize"))
        trace = sum(data["entries"][i * 10][0] for i in range(9))
        assert trace == pytest.approx(1)

    @pytest.mark.parametrize("args", [
        ("omega", "1", "2", "3"),
        ("omega", "0", "1", "1", "1"),
        ("choi", "1.5"),
        ("checkerboard", "1", "x"),
        ("checkerboard-raw", "[1, 2]"),
    ])
    def test_input_errors(self, args):
        assert run("construct", *args).exit_code == 2


class TestStateCommands:
    def test_missing_file(self, tmp_path):
        assert run("analyze", str(tmp_path / "nope.json")).exit_code == 2

    def test_analyze_omega(self, omega_file):
        result = run("--json", "analyze", str(omega_file))
        assert result.exit_code == 0
        data = parse_json(result)
        assert data["kernel_pvs"] == 6
        assert data["census"] == "12x60"
        assert data["birank"] == [4, 4]

    def test_analyze_identity(self, tmp_path):
        path = tmp_path / "id.json"
        write_state_file(BipartiteState.from_matrix(np.eye(9)), path)
        result = run("--json", "analyze", str(path))
        assert result.exit_code == 0
        data = parse_json(result)
        assert data["birank"] == [9, 9]
        assert "kernel" in data["errors"]

    def test_kernel_pvs(self, omega_file):
        result = run("--json", "kernel-pvs", str(omega_file))
        assert result.exit_code == 0
        data = parse_json(result)
        assert data["status"] == "Finite"
        assert data["count"] == 6

    def test_range_pvs(self, omega_file):
        data = parse_json(run("--json", "range-pvs", str(omega_file)))
        assert data["count"] == 0

    def test_invariants(self, omega_file):
        result = run("--json", "invariants", str(omega_file), "--ordering", "1,0,2,3,4,5")
        assert result.exit_code == 0
        assert len(parse_json(result)["symbol"]) == 6

    def test_bad_ordering(self, omega_file):
        assert run("invariants", str(omega_file), "--ordering", "0,0,1,2,3,4").exit_code == 2

    def test_census(self, omega_file):
        assert parse_json(run("--json", "census", str(omega_file)))["census"] == "12x60"

    def test_unsupported_state(self, tmp_path):
        path = tmp_path / "id.json"
        write_state_file(BipartiteState.from_matrix(np.eye(9)), path)
        assert run("census", str(path)).exit_code == 2


class TestEquivalenceCommands:
    def test_equivalent(self, tmp_path, omega_file, random_ilo):
        v, w = random_ilo
        other = tmp_path / "other.json"
        write_state_file(apply_ilo(omega(CanonicalParams(1, 2, 3, 4)), v, w), other)
        assert run("equiv", str(omega_file), str(other)).exit_code == 0

    def test_not_equivalent(self, tmp_path, omega_file):
        other = tmp_path / "other.json"
        write_state_file(omega(CanonicalParams(1, 1, 1, 1)), other)
        result = run("--json", "equiv", str(omega_file), str(other))
        assert result.exit_code == 1
        assert parse_json(result)["equivalent"] is False

    def test_canonicalize(self, omega_file):
        result = run("--json", "canonicalize", str(omega_file))
        assert result.exit_code == 0
        assert set(parse_json(result)["params"]) == {"a", "b", "c", "d"}

    def test_checkerboard(self, tmp_path, omega_file):
        path = tmp_path / "cb.json"
        write_state_file(checkerboard_canonical(CheckerboardParams(2, 1)), path)
        assert run("checkerboard", str(path)).exit_code == 0
        assert run("checkerboard", str(omega_file)).exit_code == 1

    def test_reduce(self):
        slots = [z.real for z in CheckerboardRaw.from_canonical(CheckerboardParams(1, 2)).values()]
        result = run("--json", "reduce", json.dumps(slots))
        assert result.exit_code == 0
        data = parse_json(result)
        assert data["u"] == pytest.approx(1, rel=1e-8)
        assert data["v"] == pytest.approx(2, rel=1e-8)

    def test_reduce_from_file(self, tmp_path):
        path = tmp_path / "slots.json"
        values = CheckerboardRaw.from_canonical(CheckerboardParams(2, 3)).values()
        path.write_text(json.dumps({"slots": [[z.real, z.imag] for z in values]}))
        data = parse_json(run("--json", "reduce", str(path)))
        assert data["u"] == pytest.approx(2, rel=1e-8)

    def test_reduce_wrong_length(self):
        assert run("reduce", "[1, 2, 3]").exit_code == 2


class TestOrbitCommands:
    def test_tiles_orbit(self):
        result = run("--json", "orbit", "--", "0.5", "0.6666666666666666", "-1", "0.5")
        assert result.exit_code == 0
        data = parse_json(result)
        assert data["size"] == 5
        assert len(data["points"]) == 5

    def test_out_of_box(self):
        assert run("orbit", "--", "0.5", "0.5", "1", "0.5").exit_code == 2

    def test_fixed_point(self):
        result = run("--json", "fixed-point")
        assert result.exit_code == 0
        data = parse_json(result)
        assert data["fixed"] is True
        assert data["point"][0] == pytest.approx((5 ** 0.5 - 1) / 2, abs=1e-10)
