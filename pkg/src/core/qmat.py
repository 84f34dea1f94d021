"""
Matrixkern voor 3×3 bipartiete toestanden.

Een toestand is een 9×9 Hermitische, positief semidefiniete matrix ρ,
bekeken als 3×3 raster van 3×3 blokken over systeem A. Toestanden
worden NIET genormaliseerd; normaliseren gebeurt alleen op verzoek.
"""
from dataclasses import dataclass
from typing import Optional, Union
import logging

import numpy as np
from scipy import linalg
from scipy.stats import unitary_group

from ..config.settings import ToleranceProfile, resolve_tolerances
from .errors import DimensionMismatch, InvalidParameter, InvalidState

logger = logging.getLogger(__name__)


ComplexMatrix = np.ndarray

# Dimensies (alleen 3×3 wordt ondersteund)
DIM_A = 3
DIM_B = 3

# Maximale relatieve asymmetrie ‖ρ − ρ†‖ / ‖ρ‖
HERMITIAN_TOL = 1e-10


def as_complex_matrix(m, rows: Optional[int] = None, cols: Optional[int] = None) -> ComplexMatrix:
    """Zet invoer om naar een complexe 2D numpy-array en controleer de vorm."""
    arr = np.asarray(m, dtype=complex)
    if arr.ndim != 2:
        raise DimensionMismatch(f"Verwacht een matrix, kreeg array met {arr.ndim} dimensies")
    if rows is not None and arr.shape[0] != rows:
        raise DimensionMismatch(f"Verwacht {rows} rijen, kreeg {arr.shape[0]}")
    if cols is not None and arr.shape[1] != cols:
        raise DimensionMismatch(f"Verwacht {cols} kolommen, kreeg {arr.shape[1]}")
    return arr


def allclose(m1, m2, rel_tol: float) -> bool:
    """Vergelijk matrices met een relatieve tolerantie t.o.v. de grootste norm."""
    m1 = np.asarray(m1)
    m2 = np.asarray(m2)
    scale = max(np.linalg.norm(m1), np.linalg.norm(m2), 1.0)
    return bool(np.linalg.norm(m1 - m2) <= rel_tol * scale)


@dataclass(frozen=True, eq=False)
class BipartiteState:
    """
    Toestand ρ op C^dim_a ⊗ C^dim_b.

    De constructor valideert niet, zodat ook ρ^Γ van een NPT-toestand
    als BipartiteState doorgegeven kan worden. Gebruik `from_matrix`
    voor gevalideerde toestanden.
    """
    matrix: ComplexMatrix
    dim_a: int = DIM_A
    dim_b: int = DIM_B

    @classmethod
    def from_matrix(
        cls,
        matrix,
        dim_a: int = DIM_A,
        dim_b: int = DIM_B,
        tol: Optional[ToleranceProfile] = None,
    ) -> "BipartiteState":
        """
        Bouw een gevalideerde toestand.

        Raises:
            DimensionMismatch: verkeerde afmetingen
            InvalidState: niet Hermitisch, niet PSD of spoor ≤ 0
        """
        tol = resolve_tolerances(tol)
        _check_dims(dim_a, dim_b)
        n = dim_a * dim_b
        m = as_complex_matrix(matrix, n, n)

        norm = np.linalg.norm(m)
        if np.linalg.norm(m - m.conj().T) > HERMITIAN_TOL * max(norm, 1.0):
            raise InvalidState("Matrix is niet Hermitisch")

        trace = np.trace(m).real
        if not trace > 0:
            raise InvalidState(f"Spoor moet > 0 zijn, kreeg {trace:.3e}")

        if not is_psd(m, tol):
            raise InvalidState("Matrix is niet positief semidefiniet")

        m = m.copy()
        m.setflags(write=False)
        return cls(matrix=m, dim_a=dim_a, dim_b=dim_b)

    @property
    def trace(self) -> float:
        return float(np.trace(self.matrix).real)

    @property
    def norm(self) -> float:
        """Spectraalnorm van ρ."""
        return float(np.linalg.norm(self.matrix, 2))

    def blocks(self) -> np.ndarray:
        """ρ als array van vorm (3,3,3,3): blok (i,j) is blocks()[i, :, j, :]."""
        return self.matrix.reshape(self.dim_a, self.dim_b, self.dim_a, self.dim_b)


StateLike = Union[BipartiteState, ComplexMatrix]


def _check_dims(dim_a: int, dim_b: int) -> None:
    if dim_a != DIM_A or dim_b != DIM_B:
        raise DimensionMismatch(f"Alleen 3×3 toestanden worden ondersteund, kreeg {dim_a}×{dim_b}")


def _matrix_of(rho: StateLike) -> ComplexMatrix:
    if isinstance(rho, BipartiteState):
        _check_dims(rho.dim_a, rho.dim_b)
        return rho.matrix
    return as_complex_matrix(rho, DIM_A * DIM_B, DIM_A * DIM_B)


def partial_transpose(rho: StateLike) -> StateLike:
    """
    Partiële transponering over systeem A: blok (i,j) van ρ^Γ is blok (j,i) van ρ.

    Geeft hetzelfde type terug als de invoer. Hermiticiteit is niet vereist.
    """
    m = _matrix_of(rho)
    sigma = m.reshape(DIM_A, DIM_B, DIM_A, DIM_B).transpose(2, 1, 0, 3).reshape(9, 9)
    if isinstance(rho, BipartiteState):
        return BipartiteState(matrix=sigma, dim_a=rho.dim_a, dim_b=rho.dim_b)
    return sigma


def reduced_states(rho: StateLike) -> tuple[ComplexMatrix, ComplexMatrix]:
    """
    Gereduceerde toestanden (ρ_A, ρ_B) als partiële sporen.

    Voor ρ = C†C geldt ρ_A = [tr C_i†C_j] en ρ_B = Σ_i C_i†C_i.
    """
    r = _matrix_of(rho).reshape(DIM_A, DIM_B, DIM_A, DIM_B)
    rho_a = np.einsum("ikjk->ij", r)
    rho_b = np.einsum("ikil->kl", r)
    return rho_a, rho_b


def numerical_rank(m, tol: Optional[ToleranceProfile] = None) -> int:
    """Aantal singuliere waarden boven ε_rank·σ_max (0 voor de nulmatrix)."""
    tol = resolve_tolerances(tol)
    m = np.asarray(m, dtype=complex)
    if m.size == 0:
        return 0
    sv = linalg.svdvals(m)
    if sv[0] == 0:
        return 0
    return int(np.sum(sv > tol.eps_rank * sv[0]))


def is_psd(m, tol: Optional[ToleranceProfile] = None) -> bool:
    """Kleinste eigenwaarde van het Hermitische deel ≥ −ε_psd·‖m‖."""
    tol = resolve_tolerances(tol)
    m = np.asarray(m, dtype=complex)
    h = (m + m.conj().T) / 2
    eigenvalues = np.linalg.eigvalsh(h)
    scale = np.max(np.abs(eigenvalues)) if eigenvalues.size else 0.0
    return bool(eigenvalues[0] >= -tol.eps_psd * scale)


def is_ppt(rho: StateLike, tol: Optional[ToleranceProfile] = None) -> bool:
    """Is ρ^Γ positief semidefiniet?"""
    return is_psd(_matrix_of(partial_transpose(rho)), tol)


def birank(rho: StateLike, tol: Optional[ToleranceProfile] = None) -> tuple[int, int]:
    """(rang ρ, rang ρ^Γ)."""
    m = _matrix_of(rho)
    return numerical_rank(m, tol), numerical_rank(partial_transpose(m), tol)


def extreme_necessary(ranks: tuple[int, int], dim_a: int = DIM_A, dim_b: int = DIM_B) -> bool:
    """
    Noodzakelijke voorwaarde voor extremaliteit.

    False betekent dat de toestand zeker niet extreem is (r² + s² > M²N² + 1);
    True betekent alleen "niet uitgesloten".
    """
    r, s = ranks
    return r * r + s * s <= (dim_a * dim_b) ** 2 + 1


def range_basis(rho: StateLike, tol: Optional[ToleranceProfile] = None) -> ComplexMatrix:
    """Orthonormale basis (kolommen) van het bereik van ρ."""
    tol = resolve_tolerances(tol)
    return linalg.orth(_matrix_of(rho), rcond=tol.eps_rank)


def kernel_basis(rho: StateLike, tol: Optional[ToleranceProfile] = None) -> ComplexMatrix:
    """Orthonormale basis (kolommen) van de kern van ρ."""
    tol = resolve_tolerances(tol)
    return linalg.null_space(_matrix_of(rho), rcond=tol.eps_rank)


def apply_ilo(rho: StateLike, v, w, tol: Optional[ToleranceProfile] = None) -> BipartiteState:
    """(V⊗W) ρ (V⊗W)† voor inverteerbare lokale operatoren V en W."""
    v = as_complex_matrix(v, DIM_A, DIM_A)
    w = as_complex_matrix(w, DIM_B, DIM_B)
    for name, op in (("V", v), ("W", w)):
        if numerical_rank(op, tol) < op.shape[0]:
            raise InvalidParameter(f"Lokale operator {name} is niet inverteerbaar")
    k = np.kron(v, w)
    return BipartiteState.from_matrix(k @ _matrix_of(rho) @ k.conj().T, tol=tol)


def normalize(rho: BipartiteState) -> BipartiteState:
    """Schaal naar spoor 1."""
    return BipartiteState.from_matrix(rho.matrix / rho.trace)


def random_ilo(
    rng: Optional[np.random.Generator] = None,
    max_cond: float = 10.0,
) -> tuple[ComplexMatrix, ComplexMatrix]:
    """
    Willekeurig paar goed geconditioneerde lokale operatoren (V, W).

    Elke operator is U₁·diag(s)·U₂ met Haar-unitaire U₁, U₂ en
    singuliere waarden s in [1, √max_cond], dus conditiegetal < max_cond.
    """
    if max_cond <= 1:
        raise InvalidParameter(f"max_cond moet > 1 zijn, kreeg {max_cond}")
    rng = rng if rng is not None else np.random.default_rng()
    top = np.sqrt(max_cond)

    def _one(dim: int) -> ComplexMatrix:
        u1 = unitary_group.rvs(dim, random_state=rng)
        u2 = unitary_group.rvs(dim, random_state=rng)
        s = rng.uniform(1.0, top, size=dim)
        return u1 @ np.diag(s) @ u2

    return _one(DIM_A), _one(DIM_B)
