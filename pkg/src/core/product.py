"""
Productvectoren |a⟩⊗|b⟩, projectief opgeslagen.
"""
from dataclasses import dataclass
from typing import Iterable
import logging

import numpy as np

from .errors import InvalidParameter

logger = logging.getLogger(__name__)


# Coördinaten onder deze fractie van de grootste modulus tellen als nul
ZERO_CUTOFF = 1e-12


def canonical_projective(v) -> np.ndarray:
    """
    Schaal een vector zodat de eerste niet-nul coördinaat 1 is.

    Coördinaten kleiner dan ZERO_CUTOFF·max|v| worden op nul gezet.
    """
    v = np.asarray(v, dtype=complex).ravel()
    peak = np.max(np.abs(v)) if v.size else 0.0
    if peak == 0:
        raise InvalidParameter("Nulvector heeft geen projectieve klasse")
    v = np.where(np.abs(v) < ZERO_CUTOFF * peak, 0, v)
    first = v[np.flatnonzero(v)[0]]
    return v / first


def projective_distance(u, v) -> float:
    """
    Afstand tussen de lijnen door u en v.

    Beide worden op norm 1 gebracht en in fase uitgelijnd; het resultaat is
    ‖u − e^{iθ}v‖.
    """
    u = np.asarray(u, dtype=complex).ravel()
    v = np.asarray(v, dtype=complex).ravel()
    u = u / np.linalg.norm(u)
    v = v / np.linalg.norm(v)
    overlap = np.vdot(v, u)
    phase = overlap / abs(overlap) if abs(overlap) > 0 else 1.0
    return float(np.linalg.norm(u - phase * v))


@dataclass(frozen=True, eq=False)
class ProductVector:
    """Productvector |a⟩⊗|b⟩ met beide factoren in canonieke projectieve schaal."""
    a: np.ndarray
    b: np.ndarray

    @classmethod
    def from_factors(cls, a, b) -> "ProductVector":
        a = canonical_projective(a)
        b = canonical_projective(b)
        if a.shape != (3,) or b.shape != (3,):
            raise InvalidParameter("Factoren moeten in C³ liggen")
        a.setflags(write=False)
        b.setflags(write=False)
        return cls(a=a, b=b)

    @property
    def vector(self) -> np.ndarray:
        """De 9-vector a⊗b (eerste niet-nul coördinaat is 1)."""
        return np.kron(self.a, self.b)

    def distance(self, other: "ProductVector") -> float:
        return projective_distance(self.vector, other.vector)

    def sort_key(self) -> tuple:
        """Lexicografische sleutel op de canonieke 9-vector (afgerond)."""
        v = np.round(self.vector, 9)
        return tuple((float(z.real), float(z.imag)) for z in v)

    def to_dict(self) -> dict:
        return {
            "A": [[float(z.real), float(z.imag)] for z in self.a],
            "B": [[float(z.real), float(z.imag)] for z in self.b],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ProductVector":
        a = [complex(re, im) for re, im in data["A"]]
        b = [complex(re, im) for re, im in data["B"]]
        return cls.from_factors(a, b)

    def __repr__(self) -> str:
        fmt = lambda v: "(" + ", ".join(f"{z:.4g}" for z in v) + ")"
        return f"ProductVector({fmt(self.a)} ⊗ {fmt(self.b)})"


def contains_vector(vectors: Iterable[ProductVector], target: ProductVector, tol: float = 1e-8) -> bool:
    """Zit `target` (projectief) in de lijst?"""
    return any(v.distance(target) < tol for v in vectors)


def same_vector_sets(left: list[ProductVector], right: list[ProductVector], tol: float = 1e-8) -> bool:
    """Gelijke verzamelingen productvectoren, projectief vergeleken."""
    if len(left) != len(right):
        return False
    return all(contains_vector(right, v, tol) for v in left) and all(
        contains_vector(left, v, tol) for v in right
    )
