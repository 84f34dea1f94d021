"""
UPB-fixtures (Pyramid en Tiles) en de complementtoestanden Π{ψ}.

De vectoren worden uit exacte uitdrukkingen geëvalueerd en bij het laden
gevalideerd: paarsgewijs orthogonaal, complement zonder productvectoren.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence
import logging
import math

import numpy as np

from ..config.settings import ToleranceProfile
from ..core.errors import FixtureValidationError, IndeterminateSearch, InvalidParameter
from ..core.product import ProductVector
from ..core.qmat import BipartiteState
from ..finder.product_vectors import SubspaceSpec, is_ces

logger = logging.getLogger(__name__)


# Maximale |⟨ψ_i|ψ_j⟩| voor genormaliseerde vectoren
ORTHOGONALITY_TOL = 1e-10


@dataclass(frozen=True)
class UPBQuintuple:
    """Vijf paarsgewijs orthogonale productvectoren in C³⊗C³."""
    vectors: tuple[ProductVector, ...]
    name: str = "upb"

    def __post_init__(self):
        if len(self.vectors) != 5:
            raise InvalidParameter(f"Een UPB in C³⊗C³ heeft 5 vectoren, kreeg {len(self.vectors)}")

    def unit_vectors(self) -> np.ndarray:
        """De vijf 9-vectoren op norm 1, als kolommen."""
        cols = [v.vector / np.linalg.norm(v.vector) for v in self.vectors]
        return np.column_stack(cols)

    def max_overlap(self) -> float:
        g = self.unit_vectors()
        gram = g.conj().T @ g
        return float(np.max(np.abs(gram - np.diag(np.diag(gram)))))

    def reordered(self, order: Sequence[int]) -> "UPBQuintuple":
        """Nieuwe volgorde; positie i krijgt vector order[i] (0-gebaseerd)."""
        if sorted(order) != list(range(5)):
            raise InvalidParameter(f"Geen permutatie van 0..4: {list(order)}")
        return UPBQuintuple(tuple(self.vectors[i] for i in order), self.name)

    def complement(self) -> SubspaceSpec:
        """Orthogonaal complement van de opspanning (dimensie 4)."""
        return SubspaceSpec(constraints=self.unit_vectors().T)


def validate_upb(q: UPBQuintuple, tol: Optional[ToleranceProfile] = None) -> None:
    """
    Controleer orthogonaliteit en onuitbreidbaarheid.

    Raises:
        FixtureValidationError: een van beide eisen faalt
    """
    overlap = q.max_overlap()
    if overlap > ORTHOGONALITY_TOL:
        raise FixtureValidationError(f"{q.name}: vectoren niet orthogonaal (max overlap {overlap:.2e})")
    try:
        unextendible = is_ces(q.complement(), tol)
    except IndeterminateSearch as e:
        raise FixtureValidationError(f"{q.name}: onuitbreidbaarheid onbeslist ({e})") from e
    if not unextendible:
        raise FixtureValidationError(f"{q.name}: complement bevat een productvector")


def upb_state(q: UPBQuintuple, tol: Optional[ToleranceProfile] = None) -> BipartiteState:
    """
    Projector op het orthogonale complement van span(q), spoor 4.

    Raises:
        FixtureValidationError: q is geen UPB
    """
    validate_upb(q, tol)
    g = q.unit_vectors()
    projector = np.eye(9, dtype=complex) - g @ g.conj().T
    return BipartiteState.from_matrix(projector, tol=tol)


def pyramid_height() -> float:
    """h = √(1+√5)/2, zodat ⟨v_j|v_k⟩ = 0 voor j − k ≡ ±2 (mod 5)."""
    return math.sqrt(1 + math.sqrt(5)) / 2


def pyramid_vector(j: int) -> np.ndarray:
    angle = 2 * math.pi * j / 5
    return np.array([math.cos(angle), math.sin(angle), pyramid_height()])


@lru_cache(maxsize=1)
def pyramid_fixture() -> UPBQuintuple:
    """Pyramid-UPB: ψ_j = v_{3j mod 5} ⊗ v_j, j = 0..4."""
    vectors = tuple(
        ProductVector.from_factors(pyramid_vector(3 * j % 5), pyramid_vector(j)) for j in range(5)
    )
    q = UPBQuintuple(vectors, "pyramid")
    validate_upb(q)
    logger.debug("Pyramid-fixture gevalideerd")
    return q


@lru_cache(maxsize=1)
def tiles_fixture() -> UPBQuintuple:
    """Tiles-UPB: (|0⟩−|1⟩)|2⟩, |2⟩(|1⟩−|2⟩), |0⟩(|0⟩−|1⟩), (|1⟩−|2⟩)|0⟩, (Σ|i⟩)(Σ|i⟩)."""
    e0, e1, e2 = np.eye(3)
    s = e0 + e1 + e2
    pairs = [
        (e0 - e1, e2),
        (e2, e1 - e2),
        (e0, e0 - e1),
        (e1 - e2, e0),
        (s, s),
    ]
    q = UPBQuintuple(tuple(ProductVector.from_factors(a, b) for a, b in pairs), "tiles")
    validate_upb(q)
    logger.debug("Tiles-fixture gevalideerd")
    return q


# Volgorde [2,1,4,3,5] (1-gebaseerd) die het ppPNNp-kwadrupel geeft
PPPNNP_ORDER = (1, 0, 3, 2, 4)
