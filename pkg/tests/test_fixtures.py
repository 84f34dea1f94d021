"""Tests voor de UPB-fixtures."""
import numpy as np
import pytest

from src.core.errors import FixtureValidationError, InvalidParameter
from src.core.product import ProductVector, same_vector_sets
from src.core.qmat import birank, is_ppt
from src.invariants.action import act_alpha, act_beta
from src.invariants.jinvariants import classify_symbol, quintuple_invariants, relative_distance
from src.states.fixtures import (
    PPPNNP_ORDER,
    UPBQuintuple,
    pyramid_fixture,
    pyramid_vector,
    tiles_fixture,
    upb_state,
    validate_upb,
)

from .values import GOLDEN, TILES_POINT

E0, E1, E2 = np.eye(3)


def pyramid_by_definition() -> UPBQuintuple:
    """ψ_j = v_j ⊗ v_{2j mod 5}, j = 0..4."""
    pairs = [(pyramid_vector(j), pyramid_vector(2 * j % 5)) for j in range(5)]
    return UPBQuintuple(tuple(ProductVector.from_factors(a, b) for a, b in pairs), "pyramid")


def tiles_by_definition() -> UPBQuintuple:
    """|0⟩(|0⟩−|1⟩), |2⟩(|1⟩−|2⟩), (|0⟩−|1⟩)|2⟩, (|1⟩−|2⟩)|0⟩, (Σ|i⟩)(Σ|i⟩)."""
    s = E0 + E1 + E2
    pairs = [(E0, E0 - E1), (E2, E1 - E2), (E0 - E1, E2), (E1 - E2, E0), (s, s)]
    return UPBQuintuple(tuple(ProductVector.from_factors(a, b) for a, b in pairs), "tiles")


@pytest.mark.parametrize("fixture", [pyramid_fixture, tiles_fixture])
class TestUPBState:
    def test_orthogonal(self, fixture):
        assert fixture().max_overlap() < 1e-12

    def test_complement_state(self, fixture):
        rho = upb_state(fixture())
        assert rho.trace == pytest.approx(4)
        assert birank(rho) == (4, 4)
        assert is_ppt(rho)

    def test_upb_vectors_in_kernel(self, fixture):
        rho = upb_state(fixture())
        for pv in fixture().vectors:
            np.testing.assert_allclose(rho.matrix @ pv.vector, 0, atol=1e-12)


class TestPyramid:
    def test_vector_orthogonality(self):
        for j in range(5):
            for k in range(5):
                overlap = abs(pyramid_vector(j) @ pyramid_vector(k))
                if (j - k) % 5 in (2, 3):
                    assert overlap < 1e-12
                elif j != k:
                    assert overlap > 1e-3

    def test_golden_quadruple(self):
        t = quintuple_invariants(list(pyramid_fixture().reordered(PPPNNP_ORDER).vectors))
        np.testing.assert_allclose(t.quadruple, GOLDEN, atol=1e-10)
        assert classify_symbol(t)[:2] == "pp"

    def test_golden_point_fixed(self):
        assert relative_distance(act_alpha(GOLDEN), GOLDEN) < 1e-10
        assert relative_distance(act_beta(GOLDEN), GOLDEN) < 1e-10


class TestTiles:
    def test_quadruple(self):
        t = quintuple_invariants(list(tiles_fixture().reordered(PPPNNP_ORDER).vectors))
        np.testing.assert_allclose(t.quadruple, TILES_POINT, atol=1e-12)


class TestValidation:
    def test_not_orthogonal(self):
        vectors = list(tiles_fixture().vectors)
        vectors[4] = ProductVector.from_factors([1, 0, 0], [1, 0, 0])
        with pytest.raises(FixtureValidationError):
            validate_upb(UPBQuintuple(tuple(vectors), "broken"))

    def test_extendible(self):
        e = np.eye(3)
        vectors = tuple(ProductVector.from_factors(e[i], e[j]) for i, j in [(0, 0), (0, 1), (1, 0), (1, 1), (2, 2)])
        with pytest.raises(FixtureValidationError):
            validate_upb(UPBQuintuple(vectors, "standard"))

    def test_needs_five_vectors(self):
        with pytest.raises(InvalidParameter):
            UPBQuintuple(tiles_fixture().vectors[:4])

    def test_reordered_needs_permutation(self):
        with pytest.raises(InvalidParameter):
            tiles_fixture().reordered((0, 0, 1, 2, 3))


class TestDefinitionOrder:
    @pytest.mark.parametrize("fixture, by_definition, order", [
        (pyramid_fixture, pyramid_by_definition, (0, 2, 4, 1, 3)),
        (tiles_fixture, tiles_by_definition, (2, 1, 0, 3, 4)),
    ])
    def test_same_upb_up_to_ordering(self, fixture, by_definition, order):
        shipped = fixture()
        defined = by_definition()
        assert same_vector_sets(shipped.vectors, defined.vectors)
        for got, expected in zip(shipped.reordered(order).vectors, defined.vectors):
            assert got.distance(expected) < 1e-12
        np.testing.assert_allclose(upb_state(defined).matrix, upb_state(shipped).matrix, atol=1e-12)
