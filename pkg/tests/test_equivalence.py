"""Tests voor SLOCC-equivalentie en de canonieke vorm."""
import math

import numpy as np
import pytest

from src.core.errors import RootMismatch, UnsupportedClass
from src.core.qmat import apply_ilo, random_ilo
from src.equivalence.slocc import (
    canonical_form,
    canonicalize,
    cubic_coefficients,
    cubic_roots_check,
    is_equivalent,
    kernel_sextuple,
    pppnnp_quadruples,
    quadruple_for_params,
    quadruple_orbit_membership,
)
from src.invariants.jinvariants import relative_distance
from src.invariants.phi import phi
from src.states.builders import CanonicalParams, choi_quadruple, choi_state, omega
from src.states.fixtures import pyramid_fixture, tiles_fixture, upb_state

from .values import GOLDEN, TILES_POINT, random_box_point

TILES_ROOTS = (6 / (5 * math.sqrt(21)), 12 / (5 * math.sqrt(21)), -6 / (5 * math.sqrt(21)))


def contains_quadruple(quadruples, q, eps=1e-8) -> bool:
    return any(relative_distance(found, q) < eps for found in quadruples)


def random_params(rng) -> CanonicalParams:
    return CanonicalParams(*np.exp(rng.uniform(np.log(0.2), np.log(5), size=4)))


class TestIsEquivalent:
    def test_local_operator(self, omega_1234, random_ilo):
        v, w = random_ilo
        verdict = is_equivalent(omega_1234, apply_ilo(omega_1234, v, w))
        assert verdict.equivalent
        assert verdict.residual < 1e-6
        assert len(verdict.permutation) == 6

    def test_prefilter_agrees(self, omega_1234, random_ilo):
        v, w = random_ilo
        other = apply_ilo(omega_1234, v, w)
        assert is_equivalent(omega_1234, other, prefilter=True).equivalent

    def test_different_parameters(self, omega_1234, omega_1111):
        verdict = is_equivalent(omega_1234, omega_1111)
        assert not verdict.equivalent
        assert verdict.permutation is None
        assert verdict.residual > 1e-6

    def test_identity_unsupported(self, omega_1111):
        with pytest.raises(UnsupportedClass):
            is_equivalent(np.eye(9), omega_1111)

    def test_tiles_state(self):
        verdict = is_equivalent(upb_state(tiles_fixture()), omega(phi(TILES_POINT)))
        assert verdict.equivalent

    def test_to_dict(self, omega_1234):
        d = is_equivalent(omega_1234, omega_1234).to_dict()
        assert d["equivalent"] is True
        assert len(d["matched"]) == 2
        assert len(d["matched"][0]) == 6


class TestCanonicalForm:
    def test_round_trip(self, omega_1234, rng):
        v, w = random_ilo(rng, max_cond=10)
        rho = apply_ilo(omega_1234, v, w)
        params = canonicalize(rho)
        assert is_equivalent(omega(params), rho).equivalent

    def test_form_fields(self, omega_1234):
        form = canonical_form(omega_1234)
        assert len(form.ordering) == 6
        assert len(form.sextuple) == 6
        assert relative_distance(phi(form.quadruple).as_tuple(), form.params.as_tuple()) < 1e-9
        assert set(form.to_dict()) == {"params", "ordering", "quadruple"}

    def test_pyramid_lands_on_golden_point(self):
        form = canonical_form(upb_state(pyramid_fixture()))
        assert relative_distance(form.quadruple, GOLDEN) < 1e-8
        assert relative_distance(form.params.as_tuple(), phi(GOLDEN).as_tuple()) < 1e-8

    def test_orbit_membership(self):
        rho = omega(phi(TILES_POINT))
        assert quadruple_orbit_membership(rho, TILES_POINT)
        assert quadruple_orbit_membership(rho, (2 / 3, 3 / 4, -3, 1 / 3))
        assert not quadruple_orbit_membership(rho, GOLDEN)


class TestPppnnpQuadruples:
    def test_choi(self):
        s = kernel_sextuple(choi_state(0.5))
        assert contains_quadruple(pppnnp_quadruples(s).values(), choi_quadruple(0.5))

    def test_phi_round_trip(self, rng):
        for _ in range(3):
            q = random_box_point(rng)
            s = kernel_sextuple(omega(phi(q)))
            quadruples = pppnnp_quadruples(s)
            assert len(quadruples) == 60
            assert contains_quadruple(quadruples.values(), q)

    def test_quadruple_for_params(self):
        q = quadruple_for_params(phi(TILES_POINT))
        assert relative_distance(phi(q).as_tuple(), phi(TILES_POINT).as_tuple()) < 1e-6


class TestCubicRoots:
    def test_tiles(self):
        roots = cubic_roots_check(phi(TILES_POINT), TILES_POINT)
        np.testing.assert_allclose(roots, TILES_ROOTS, rtol=1e-10)

    def test_roots_solve_cubic(self, rng):
        q = random_box_point(rng)
        p = phi(q)
        coeffs = cubic_coefficients(p)
        for root in cubic_roots_check(p, q):
            assert abs(np.polynomial.polynomial.polyval(root, coeffs)) < 1e-8 * np.linalg.norm(coeffs)

    def test_wrong_quadruple(self):
        with pytest.raises(RootMismatch):
            cubic_roots_check(phi(TILES_POINT), GOLDEN)

    def test_coefficients_degree(self):
        assert len(cubic_coefficients(CanonicalParams(1, 2, 3, 4))) == 4


@pytest.mark.slow
class TestEquivalenceBatch:
    def test_local_operator_pairs(self, rng):
        for _ in range(50):
            rho = omega(random_params(rng))
            v, w = random_ilo(rng, max_cond=10)
            assert is_equivalent(rho, apply_ilo(rho, v, w)).equivalent

    def test_independent_pairs(self, rng):
        collisions = 0
        for _ in range(50):
            rho, other = omega(random_params(rng)), omega(random_params(rng))
            if is_equivalent(rho, other).equivalent:
                collisions += 1
                assert quadruple_orbit_membership(other, canonical_form(rho).quadruple)
        assert collisions <= 1

    def test_canonicalize_after_local_operators(self, rng):
        for _ in range(20):
            rho = omega(random_params(rng))
            v, w = random_ilo(rng, max_cond=20)
            other = apply_ilo(rho, v, w)
            assert is_equivalent(omega(canonicalize(other)), rho).equivalent

    def test_phi_round_trip(self, rng):
        for _ in range(50):
            q = random_box_point(rng)
            assert contains_quadruple(pppnnp_quadruples(kernel_sextuple(omega(phi(q)))).values(), q, eps=1e-7)
