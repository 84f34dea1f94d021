"""
J-invarianten van vijftallen en zestallen productvectoren.

Met Δ_ijk = det[α_i α_j α_k] (kolommen) aan de A-zijde:

    J₁ = Δ₂₀₄Δ₀₁₃ / (Δ₂₀₃Δ₀₁₄)
    J₂ = Δ₀₁₄Δ₁₂₃ / (Δ₀₁₃Δ₁₂₄)
    J₃ = Δ₁₂₄Δ₂₀₃ / (Δ₁₂₃Δ₂₀₄)

en analoog aan de B-zijde. Er geldt J₁J₂J₃ = 1 aan elke kant.
"""
from dataclasses import dataclass, astuple
from itertools import permutations
from typing import Optional, Sequence
import logging

import numpy as np
import pandas as pd

from ..config.settings import ToleranceProfile, resolve_tolerances
from ..core.errors import DegenerateQuintuple, IndeterminateSymbol, InvalidParameter, NonRealInvariant
from ..core.product import ProductVector
from .group import Ordering, apply_ordering

logger = logging.getLogger(__name__)


Quadruple = tuple[float, float, float, float]

PPPNNP = "ppPNNp"


@dataclass(frozen=True)
class InvariantTuple:
    """De zes J-invarianten (J₁ᴬ, J₂ᴬ, J₃ᴬ, J₁ᴮ, J₂ᴮ, J₃ᴮ)."""
    j1a: float
    j2a: float
    j3a: float
    j1b: float
    j2b: float
    j3b: float

    def as_tuple(self) -> tuple[float, ...]:
        return astuple(self)

    @property
    def quadruple(self) -> Quadruple:
        """(x, y, z, w) = (J₁ᴬ, J₂ᴬ, J₂ᴮ, J₃ᴮ)."""
        return (self.j1a, self.j2a, self.j2b, self.j3b)

    def product_relations(self) -> tuple[float, float]:
        return self.j1a * self.j2a * self.j3a, self.j1b * self.j2b * self.j3b

    def close_to(self, other: "InvariantTuple", eps: float) -> bool:
        return relative_distance(self.as_tuple(), other.as_tuple()) < eps

    def to_dict(self) -> dict:
        return {
            "tuple": list(self.as_tuple()),
            "quadruple": list(self.quadruple),
        }


def relative_distance(left: Sequence[float], right: Sequence[float]) -> float:
    """max_i |l_i − r_i| / (1 + |r_i|)."""
    left = np.asarray(left, dtype=float)
    right = np.asarray(right, dtype=float)
    return float(np.max(np.abs(left - right) / (1 + np.abs(right))))


def delta(v1, v2, v3) -> complex:
    """Determinant van de 3×3 matrix met kolommen v1, v2, v3."""
    return complex(np.linalg.det(np.column_stack([v1, v2, v3])))


def _side_invariants(vectors: Sequence[np.ndarray], tol: ToleranceProfile) -> tuple[complex, complex, complex]:
    units = [np.asarray(v, dtype=complex) / np.linalg.norm(v) for v in vectors]

    def d(i, j, k):
        return delta(units[i], units[j], units[k])

    d013, d014, d123, d124, d203, d204 = d(0, 1, 3), d(0, 1, 4), d(1, 2, 3), d(1, 2, 4), d(2, 0, 3), d(2, 0, 4)
    for name, value in (("Δ013", d013), ("Δ014", d014), ("Δ123", d123), ("Δ124", d124), ("Δ203", d203), ("Δ204", d204)):
        if abs(value) < tol.eps_rank:
            raise DegenerateQuintuple(f"{name} verdwijnt ({abs(value):.2e})")
    j1 = d204 * d013 / (d203 * d014)
    j2 = d014 * d123 / (d013 * d124)
    j3 = d124 * d203 / (d123 * d204)
    return j1, j2, j3


def _real(value: complex, tol: ToleranceProfile, name: str) -> float:
    if abs(value.imag) > tol.eps_match * (1 + abs(value)):
        raise NonRealInvariant(f"{name} heeft imaginair deel {value.imag:.3e}")
    return float(value.real)


def complex_invariants(q: Sequence[ProductVector], tol: Optional[ToleranceProfile] = None) -> np.ndarray:
    """De zes invarianten zonder realiteitseis (complexe array)."""
    tol = resolve_tolerances(tol)
    if len(q) < 5:
        raise InvalidParameter(f"Verwacht minstens 5 productvectoren, kreeg {len(q)}")
    side_a = _side_invariants([v.a for v in q[:5]], tol)
    side_b = _side_invariants([v.b for v in q[:5]], tol)
    return np.array(side_a + side_b, dtype=complex)


def quintuple_invariants(q: Sequence[ProductVector], tol: Optional[ToleranceProfile] = None) -> InvariantTuple:
    """
    J-invarianten van een geordend vijftal.

    Raises:
        DegenerateQuintuple: een Δ in een noemer is (numeriek) nul
        NonRealInvariant: een invariant is niet reëel binnen ε_match
    """
    tol = resolve_tolerances(tol)
    if len(q) != 5:
        raise InvalidParameter(f"Verwacht 5 productvectoren, kreeg {len(q)}")
    values = complex_invariants(q, tol)
    names = ("J1A", "J2A", "J3A", "J1B", "J2B", "J3B")
    return InvariantTuple(*(_real(v, tol, n) for v, n in zip(values, names)))


def sextuple_invariants(s: Sequence[ProductVector], tol: Optional[ToleranceProfile] = None) -> InvariantTuple:
    """Invarianten van een zestal: die van de eerste vijf."""
    if len(s) != 6:
        raise InvalidParameter(f"Verwacht 6 productvectoren, kreeg {len(s)}")
    return quintuple_invariants(s[:5], tol)


def classify_value(value: float, tol: Optional[ToleranceProfile] = None) -> str:
    """p voor (0,1), P voor (1,∞), N voor (−∞,0)."""
    tol = resolve_tolerances(tol)
    if abs(value) <= tol.eps_symbol or abs(value - 1) <= tol.eps_symbol:
        raise IndeterminateSymbol(f"Waarde {value!r} ligt binnen ε_symbol van 0 of 1")
    if value < 0:
        return "N"
    return "p" if value < 1 else "P"


def classify_symbol(t: InvariantTuple, tol: Optional[ToleranceProfile] = None) -> str:
    """Zes-letterig symbool over {p, P, N}."""
    return "".join(classify_value(v, tol) for v in t.as_tuple())


def ordering_symbol(s: Sequence[ProductVector], order: Ordering, tol: Optional[ToleranceProfile] = None) -> str:
    try:
        return classify_symbol(sextuple_invariants(apply_ordering(s, order), tol), tol)
    except IndeterminateSymbol as e:
        raise IndeterminateSymbol(str(e), permutation=order) from e


def all_orderings() -> list[Ordering]:
    """De 720 ordeningen in lexicografische volgorde."""
    return list(permutations(range(6)))


def ordering_symbols(s: Sequence[ProductVector], tol: Optional[ToleranceProfile] = None) -> dict[Ordering, str]:
    """Symbool per ordening; vijftallen met hetzelfde begin worden hergebruikt."""
    tol = resolve_tolerances(tol)
    if len(s) != 6:
        raise InvalidParameter(f"Verwacht 6 productvectoren, kreeg {len(s)}")
    cache: dict[tuple[int, ...], str] = {}
    result = {}
    for order in all_orderings():
        prefix = order[:5]
        if prefix not in cache:
            cache[prefix] = ordering_symbol(s, order, tol)
        result[order] = cache[prefix]
    return result


def symbol_census(s: Sequence[ProductVector], tol: Optional[ToleranceProfile] = None) -> dict[str, int]:
    """
    Symbool → multipliciteit over alle 720 ordeningen.

    Voor de kern van een rang-vier PPTES verschijnen 12 symbolen, elk 60 keer.
    """
    symbols = pd.Series(list(ordering_symbols(s, tol).values()), name="symbol")
    counts = symbols.value_counts().sort_index()
    logger.info(f"Census: {len(counts)} symbolen over {len(symbols)} ordeningen")
    return {str(k): int(v) for k, v in counts.items()}


def census_summary(census: dict[str, int]) -> str:
    """'12x60' voor de verwachte census, anders een beschrijving van de afwijking."""
    counts = set(census.values())
    if len(census) == 12 and counts == {60}:
        return "12x60"
    return f"{len(census)} symbolen, multipliciteiten {sorted(counts)}"


def in_box(q: Sequence[float]) -> bool:
    """Ligt (x, y, z, w) in R: x, y, w ∈ (0,1) en z < 0?"""
    x, y, z, w = q
    return 0 < x < 1 and 0 < y < 1 and z < 0 and 0 < w < 1


def frame_sextuple(q: Sequence[float]) -> list[ProductVector]:
    """
    Representatief zestal bij kwadrupel q.

    Beide zijden: e₀, e₁, e₂, (1,1,1), r en een zesde vector s, met
    r = (1, J₁J₂, J₂) en s bepaald door de lineaire afhankelijkheid van de
    zes productvectoren in een vijfdimensionale kern.
    """
    x, y, z, w = (float(v) for v in q)
    j1b = 1 / (z * w)
    r = np.array([1, x * y, y])
    big_r = np.array([1, j1b * z, z])

    xs = {(i, j): r[i] * big_r[j] for i in range(3) for j in range(3) if i != j}
    s1 = xs[0, 1] + xs[1, 2] + xs[2, 0]
    s1p = xs[0, 2] + xs[2, 1] + xs[1, 0]
    s2 = xs[0, 1] * xs[1, 2] + xs[1, 2] * xs[2, 0] + xs[2, 0] * xs[0, 1]
    s2p = xs[0, 2] * xs[2, 1] + xs[2, 1] * xs[1, 0] + xs[1, 0] * xs[0, 2]
    if abs(s1 - s1p) < 1e-14 * (1 + abs(s1)):
        raise DegenerateQuintuple("Zesde vector niet bepaald (S₁ = S₁')")
    mu = -(s2 - s2p) / (s1 - s1p)
    big_x = {key: mu + value for key, value in xs.items()}

    sixth_a = np.array([1, big_x[1, 2] / big_x[0, 2], big_x[2, 1] / big_x[0, 1]])
    sixth_b = np.array([1, big_x[2, 1] / big_x[2, 0], big_x[1, 2] / big_x[1, 0]])

    e0, e1, e2 = np.eye(3)
    ones = np.ones(3)
    side_a = [e0, e1, e2, ones, r, sixth_a]
    side_b = [e0, e1, e2, ones, big_r, sixth_b]
    return [ProductVector.from_factors(a, b) for a, b in zip(side_a, side_b)]


def permuted_quadruple(q: Sequence[float], order: Ordering, tol: Optional[ToleranceProfile] = None) -> Quadruple:
    """Kwadrupel van het representatieve zestal na herordening."""
    sextuple = apply_ordering(frame_sextuple(q), order)
    return sextuple_invariants(sextuple, tol).quadruple


def is_checkerboard_quadruple(q: Sequence[float], tol: Optional[ToleranceProfile] = None) -> bool:
    """
    Checkerboard-voorwaarde in ppPNNp-coördinaten:
    J₂ᴬ(1 − J₁ᴬJ₂ᴬ) = 1 − J₂ᴬ en J₂ᴮ + J₃ᴮ = 2J₂ᴮJ₃ᴮ.
    """
    tol = resolve_tolerances(tol)
    x, y, z, w = q
    side_a = abs(2 * y - x * y * y - 1) / (1 + abs(x * y * y))
    side_b = abs(z + w - 2 * z * w) / (1 + abs(z * w))
    return bool(side_a < tol.eps_match and side_b < tol.eps_match)
