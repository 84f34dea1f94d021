"""Tests voor JSON-toestandsbestanden."""
import json

import numpy as np
import pytest

from src.core.errors import StateFileError
from src.core.product import ProductVector
from src.outputs.state_files import (
    SCHEMA_VERSION,
    complex_from_json,
    matrix_from_json,
    product_vectors_from_json,
    product_vectors_to_json,
    read_state_file,
    round_significant,
    state_from_json,
    state_to_json,
    to_jsonable,
    write_state_file,
)
from src.states.builders import choi_state


class TestWriteRead:
    def test_round_trip(self, tmp_path, omega_1234):
        path = tmp_path / "omega.json"
        write_state_file(omega_1234, path, {"kind": "omega", "params": [1, 2, 3, 4]})
        rho = read_state_file(path)
        np.testing.assert_allclose(rho.matrix, omega_1234.matrix, rtol=1e-11)

    def test_layout(self, omega_1234):
        data = json.loads(write_state_file(omega_1234, None, {"kind": "omega"}))
        assert data["schema"] == SCHEMA_VERSION
        assert (data["dimA"], data["dimB"], data["rows"], data["cols"]) == (3, 3, 9, 9)
        assert len(data["entries"]) == 81
        assert data["provenance"] == {"kind": "omega"}

    def test_choi_entries(self):
        data = state_to_json(choi_state(0.5))
        assert data["entries"][20] == [4.0, 0.0]
        assert data["entries"][0] == [1.0, 0.0]

    def test_missing_file(self, tmp_path):
        with pytest.raises(StateFileError):
            read_state_file(tmp_path / "missing.json")

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json", encoding="utf-8")
        with pytest.raises(StateFileError):
            read_state_file(path)


class TestStateFromJson:
    def test_wrong_count(self, omega_1234):
        data = state_to_json(omega_1234)
        data["entries"] = data["entries"][:80]
        with pytest.raises(StateFileError):
            state_from_json(data)

    def test_not_hermitian(self):
        m = np.eye(9, dtype=complex)
        m[0, 1] = 1j
        data = {"rows": 9, "cols": 9, "entries": [[z.real, z.imag] for z in m.ravel()]}
        with pytest.raises(StateFileError):
            state_from_json(data)

    def test_unknown_schema(self, omega_1234):
        data = state_to_json(omega_1234)
        data["schema"] = 99
        with pytest.raises(StateFileError):
            state_from_json(data)

    def test_not_an_object(self):
        with pytest.raises(StateFileError):
            state_from_json([1, 2, 3])

    def test_real_entries_allowed(self):
        data = {"rows": 9, "cols": 9, "entries": list(np.eye(9).ravel())}
        np.testing.assert_array_equal(state_from_json(data).matrix, np.eye(9))

    def test_missing_fields(self):
        with pytest.raises(StateFileError):
            matrix_from_json({"entries": []})


class TestJsonValues:
    def test_round_significant(self):
        assert round_significant(1 / 3, 4) == 0.3333
        assert round_significant(123456.789, 3) == 123000.0

    def test_complex(self):
        assert to_jsonable(1 + 2j) == [1.0, 2.0]
        assert complex_from_json([0.5, -1]) == 0.5 - 1j
        assert complex_from_json(2) == 2
        with pytest.raises(StateFileError):
            complex_from_json("1+2j")

    def test_nested(self):
        result = to_jsonable({"a": (np.float64(0.1), np.int64(3)), 1: np.array([True, False])})
        assert result == {"a": [0.1, 3], "1": [True, False]}

    def test_product_vectors(self):
        vectors = [ProductVector.from_factors([1, 1j, 0], [0, 1, 2])]
        restored = product_vectors_from_json(product_vectors_to_json(vectors))
        assert restored[0].distance(vectors[0]) < 1e-12

    def test_bad_product_vectors(self):
        with pytest.raises(StateFileError):
            product_vectors_from_json([{"A": [[1, 0]]}])
