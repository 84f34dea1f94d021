"""Tests voor src.core.qmat."""
import numpy as np
import pytest

from src.core.errors import DimensionMismatch, InvalidParameter, InvalidState
from src.core.qmat import (
    BipartiteState,
    apply_ilo,
    birank,
    extreme_necessary,
    is_ppt,
    kernel_basis,
    normalize,
    numerical_rank,
    partial_transpose,
    random_ilo,
    range_basis,
    reduced_states,
)
from src.states.builders import CanonicalParams, omega


def max_entangled() -> np.ndarray:
    psi = np.zeros(9)
    psi[[0, 4, 8]] = 1
    return np.outer(psi, psi)


class TestPartialTranspose:
    @pytest.mark.parametrize("params", [(1, 1, 1, 1), (1, 2, 3, 4), (0.2, 5, 0.7, 2.5), (4.5, 0.3, 1.7, 0.25)])
    def test_omega_is_self_dual(self, params):
        rho = omega(CanonicalParams(*params))
        gamma = partial_transpose(rho)
        assert np.linalg.norm(gamma.matrix - rho.matrix) <= 1e-12 * np.linalg.norm(rho.matrix)

    def test_involution(self, rng):
        m = rng.normal(size=(9, 9)) + 1j * rng.normal(size=(9, 9))
        np.testing.assert_allclose(partial_transpose(partial_transpose(m)), m)

    def test_transposes_a_indices(self):
        m = np.zeros((9, 9))
        m[0 * 3 + 1, 2 * 3 + 0] = 1  # |0 1⟩⟨2 0|
        expected = np.zeros((9, 9))
        expected[2 * 3 + 1, 0 * 3 + 0] = 1  # |2 1⟩⟨0 0|
        np.testing.assert_array_equal(partial_transpose(m), expected)

    def test_keeps_input_type(self, omega_1111):
        assert isinstance(partial_transpose(omega_1111), BipartiteState)
        assert isinstance(partial_transpose(omega_1111.matrix), np.ndarray)

    def test_max_entangled_is_npt(self):
        eigenvalues = np.linalg.eigvalsh(partial_transpose(max_entangled()))
        assert eigenvalues[0] == pytest.approx(-1)
        assert not is_ppt(max_entangled())

    def test_wrong_shape(self):
        with pytest.raises(DimensionMismatch):
            partial_transpose(np.eye(4))


class TestReducedStates:
    def test_identity(self):
        rho_a, rho_b = reduced_states(np.eye(9))
        np.testing.assert_allclose(rho_a, 3 * np.eye(3))
        np.testing.assert_allclose(rho_b, 3 * np.eye(3))

    def test_traces_agree(self, omega_1234):
        rho_a, rho_b = reduced_states(omega_1234)
        assert np.trace(rho_a).real == pytest.approx(omega_1234.trace)
        assert np.trace(rho_b).real == pytest.approx(omega_1234.trace)

    def test_product_state(self):
        a = np.array([1, 2, 0]) / np.sqrt(5)
        b = np.array([0, 1, 1j]) / np.sqrt(2)
        psi = np.kron(a, b)
        rho_a, rho_b = reduced_states(np.outer(psi, psi.conj()))
        np.testing.assert_allclose(rho_a, np.outer(a, a.conj()), atol=1e-14)
        np.testing.assert_allclose(rho_b, np.outer(b, b.conj()), atol=1e-14)

    def test_partial_transpose_identities(self, rng):
        m = rng.normal(size=(9, 9)) + 1j * rng.normal(size=(9, 9))
        rho_a, rho_b = reduced_states(m)
        gamma_a, gamma_b = reduced_states(partial_transpose(m))
        np.testing.assert_allclose(gamma_b, rho_b, atol=1e-12)
        np.testing.assert_allclose(gamma_a, rho_a.T, atol=1e-12)

    def test_partial_transpose_identities_on_state(self, omega_1234, random_ilo):
        rho = apply_ilo(omega_1234, *random_ilo)
        rho_a, rho_b = reduced_states(rho)
        gamma_a, gamma_b = reduced_states(partial_transpose(rho))
        np.testing.assert_allclose(gamma_b, rho_b, atol=1e-10)
        np.testing.assert_allclose(gamma_a, rho_a.T, atol=1e-10)


class TestNumericalRank:
    def test_zero(self):
        assert numerical_rank(np.zeros((9, 9))) == 0

    def test_relative_cutoff(self):
        assert numerical_rank(np.diag([1, 1e-12, 0])) == 1
        assert numerical_rank(np.diag([1, 1e-6, 0])) == 2

    def test_scale_invariant(self, omega_1234):
        assert numerical_rank(omega_1234.matrix) == numerical_rank(1e6 * omega_1234.matrix) == 4


class TestBirankAndPPT:
    @pytest.mark.parametrize("params", [(1, 1, 1, 1), (1, 2, 3, 4), (0.3, 0.4, 2.0, 3.0)])
    def test_omega(self, params):
        rho = omega(CanonicalParams(*params))
        assert birank(rho) == (4, 4)
        assert is_ppt(rho)

    def test_identity(self):
        assert birank(np.eye(9)) == (9, 9)
        assert is_ppt(np.eye(9))

    @pytest.mark.parametrize("ranks, expected", [
        ((4, 4), True),
        ((5, 6), True),
        ((7, 6), False),
        ((9, 9), False),
    ])
    def test_extreme_necessary(self, ranks, expected):
        assert extreme_necessary(ranks) is expected


class TestBipartiteState:
    def test_not_hermitian(self):
        m = np.eye(9, dtype=complex)
        m[0, 1] = 1
        with pytest.raises(InvalidState):
            BipartiteState.from_matrix(m)

    def test_not_psd(self):
        with pytest.raises(InvalidState):
            BipartiteState.from_matrix(np.diag([1, 1, 1, 1, 1, 1, 1, 1, -1]))

    def test_zero_trace(self):
        with pytest.raises(InvalidState):
            BipartiteState.from_matrix(np.zeros((9, 9)))

    def test_wrong_dims(self):
        with pytest.raises(DimensionMismatch):
            BipartiteState.from_matrix(np.eye(8))
        with pytest.raises(DimensionMismatch):
            BipartiteState.from_matrix(np.eye(16), dim_a=4, dim_b=4)

    def test_normalize(self, omega_1234):
        assert normalize(omega_1234).trace == pytest.approx(1)


class TestBases:
    def test_kernel_and_range(self, omega_1234):
        kernel = kernel_basis(omega_1234)
        rng_basis = range_basis(omega_1234)
        assert kernel.shape == (9, 5)
        assert rng_basis.shape == (9, 4)
        np.testing.assert_allclose(omega_1234.matrix @ kernel, 0, atol=1e-10)
        np.testing.assert_allclose(kernel.conj().T @ rng_basis, 0, atol=1e-10)

    def test_omega_kernel_contains_diagonal_products(self, omega_1234):
        for i in range(3):
            e = np.zeros(9)
            e[4 * i] = 1
            np.testing.assert_allclose(omega_1234.matrix @ e, 0, atol=1e-14)


class TestLocalOperators:
    def test_random_ilo_condition(self, rng):
        for _ in range(5):
            v, w = random_ilo(rng, max_cond=10)
            assert np.linalg.cond(v) < 10
            assert np.linalg.cond(w) < 10

    def test_preserves_birank(self, omega_1234, random_ilo):
        v, w = random_ilo
        rho = apply_ilo(omega_1234, v, w)
        assert birank(rho) == (4, 4)
        assert is_ppt(rho)

    def test_ppt_invariant(self, rng):
        for _ in range(5):
            v, w = random_ilo(rng, max_cond=10)
            assert is_ppt(apply_ilo(omega(CanonicalParams(0.3, 0.4, 2.0, 3.0)), v, w))
            assert not is_ppt(apply_ilo(max_entangled(), v, w))

    def test_singular_operator(self, omega_1111):
        with pytest.raises(InvalidParameter):
            apply_ilo(omega_1111, np.diag([1, 1, 0]), np.eye(3))

    def test_max_cond_must_exceed_one(self, rng):
        with pytest.raises(InvalidParameter):
            random_ilo(rng, max_cond=1)


@pytest.mark.slow
class TestSelfDualityGrid:
    def test_log_grid(self):
        axis = np.geomspace(0.2, 5, 10)
        for a in axis:
            for b in axis:
                for c in axis:
                    for d in axis:
                        rho = omega(CanonicalParams(a, b, c, d))
                        gamma = partial_transpose(rho)
                        assert np.linalg.norm(gamma.matrix - rho.matrix) <= 1e-12 * np.linalg.norm(rho.matrix)
                        assert birank(rho) == (4, 4)
