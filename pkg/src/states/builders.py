"""
Bouwers voor de concrete toestandsfamilies.

Alle toestanden worden gegeven als ρ = C†C met C = [C₀ C₁ C₂] een 4×9
matrix van drie 4×3 blokken, of direct als 9×9 matrix (Choi).
"""
from dataclasses import dataclass, astuple, fields
from typing import Optional
import logging
import math

import numpy as np

from ..config.settings import ToleranceProfile
from ..core.errors import InvalidParameter
from ..core.qmat import BipartiteState, ComplexMatrix
from ..core.product import ProductVector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CanonicalParams:
    """Parameters (a, b, c, d) van de canonieke vorm ω; allemaal > 0."""
    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if not (math.isfinite(value) and value > 0):
                raise InvalidParameter(f"Parameter {f.name} moet > 0 zijn, kreeg {value}")

    def as_tuple(self) -> tuple[float, float, float, float]:
        return astuple(self)

    def to_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "c": self.c, "d": self.d}


@dataclass(frozen=True)
class CheckerboardParams:
    """Parameters (u, v) van de checkerboard normaalvorm; beide > 0."""
    u: float
    v: float

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if not (math.isfinite(value) and value > 0):
                raise InvalidParameter(f"Parameter {f.name} moet > 0 zijn, kreeg {value}")

    def to_dict(self) -> dict:
        return {"u": self.u, "v": self.v}


# Slotnamen van het checkerboard-patroon, per blok (rij, kolom)
CHECKERBOARD_SLOTS = {
    0: {"a": (0, 0), "d": (0, 2), "g": (1, 1), "j": (2, 0), "m": (2, 2), "q": (3, 1)},
    1: {"c": (0, 1), "f": (1, 0), "i": (1, 2), "l": (2, 1), "p": (3, 0), "s": (3, 2)},
    2: {"b": (0, 0), "e": (0, 2), "h": (1, 1), "k": (2, 0), "n": (2, 2), "r": (3, 1)},
}
CHECKERBOARD_SLOT_NAMES = tuple(sorted(name for slots in CHECKERBOARD_SLOTS.values() for name in slots))


@dataclass(frozen=True)
class CheckerboardRaw:
    """
    Algemene checkerboard-blokken: 18 complexe waarden op vaste posities.

    Alle andere posities van C₀, C₁, C₂ zijn identiek nul.
    """
    a: complex = 0
    b: complex = 0
    c: complex = 0
    d: complex = 0
    e: complex = 0
    f: complex = 0
    g: complex = 0
    h: complex = 0
    i: complex = 0
    j: complex = 0
    k: complex = 0
    l: complex = 0  # noqa: E741
    m: complex = 0
    n: complex = 0
    p: complex = 0
    q: complex = 0
    r: complex = 0
    s: complex = 0

    def blocks(self) -> list[ComplexMatrix]:
        """De drie 4×3 blokken C₀, C₁, C₂."""
        result = []
        for block in range(3):
            c = np.zeros((4, 3), dtype=complex)
            for name, (row, col) in CHECKERBOARD_SLOTS[block].items():
                c[row, col] = getattr(self, name)
            result.append(c)
        return result

    @classmethod
    def from_blocks(cls, blocks, tol: float = 1e-12) -> "CheckerboardRaw":
        """
        Lees de slots uit drie 4×3 blokken.

        Raises:
            InvalidParameter: een positie buiten het patroon is niet nul
        """
        values = {}
        scale = max(max(np.max(np.abs(np.asarray(b))) for b in blocks), 1.0)
        for block, c in enumerate(blocks):
            c = np.asarray(c, dtype=complex)
            mask = np.ones((4, 3), dtype=bool)
            for name, (row, col) in CHECKERBOARD_SLOTS[block].items():
                values[name] = complex(c[row, col])
                mask[row, col] = False
            if np.max(np.abs(c[mask])) > tol * scale:
                raise InvalidParameter(f"Blok {block} heeft waarden buiten het checkerboard-patroon")
        return cls(**values)

    @classmethod
    def from_values(cls, values) -> "CheckerboardRaw":
        """Uit een lijst van 18 waarden in alfabetische slotvolgorde."""
        values = list(values)
        if len(values) != len(CHECKERBOARD_SLOT_NAMES):
            raise InvalidParameter(f"Verwacht {len(CHECKERBOARD_SLOT_NAMES)} waarden, kreeg {len(values)}")
        return cls(**{name: complex(v) for name, v in zip(CHECKERBOARD_SLOT_NAMES, values)})

    @classmethod
    def from_canonical(cls, p: CheckerboardParams) -> "CheckerboardRaw":
        return cls.from_blocks(checkerboard_canonical_blocks(p))

    def values(self) -> list[complex]:
        return [complex(getattr(self, name)) for name in CHECKERBOARD_SLOT_NAMES]


def _state_from_blocks(blocks, tol: Optional[ToleranceProfile] = None) -> BipartiteState:
    c = np.hstack([np.asarray(b, dtype=complex) for b in blocks])
    return BipartiteState.from_matrix(c.conj().T @ c, tol=tol)


def omega_blocks(p: CanonicalParams) -> list[ComplexMatrix]:
    """Blokken C₀, C₁, C₂ van ω(a,b,c,d)."""
    a, b, c, d = p.as_tuple()
    c0 = np.array([
        [0, a, b],
        [0, 0, 1],
        [0, 0, 0],
        [0, 0, 0],
    ], dtype=complex)
    c1 = np.array([
        [0, 0, 0],
        [0, 0, c],
        [0, 0, 1],
        [1, 0, -1 / d],
    ], dtype=complex)
    c2 = np.array([
        [0, -1 / b, 0],
        [0, 1, 0],
        [1, -c, 0],
        [d, 0, 0],
    ], dtype=complex)
    return [c0, c1, c2]


def omega(p: CanonicalParams, tol: Optional[ToleranceProfile] = None) -> BipartiteState:
    """Canonieke rang-vier PPTES ω(a,b,c,d); invariant onder partiële transponering."""
    return _state_from_blocks(omega_blocks(p), tol)


def checkerboard_raw(r: CheckerboardRaw, tol: Optional[ToleranceProfile] = None) -> BipartiteState:
    """
    ρ = C†C uit algemene checkerboard-blokken.

    Geen garantie op PPT of verstrengeling; de nultoestand wordt geweigerd.
    """
    return _state_from_blocks(r.blocks(), tol)


def checkerboard_canonical_blocks(p: CheckerboardParams) -> list[ComplexMatrix]:
    u, v = p.u, p.v
    c0 = np.array([
        [1, 0, 0],
        [0, u, 0],
        [0, 0, 0],
        [0, 0, 0],
    ], dtype=complex)
    c1 = np.array([
        [0, u, 0],
        [1, 0, 0],
        [0, 1, 0],
        [0, 0, 1],
    ], dtype=complex)
    c2 = np.array([
        [0, 0, 0],
        [0, v, 0],
        [v, 0, 1],
        [0, 1, 0],
    ], dtype=complex)
    return [c0, c1, c2]


def checkerboard_canonical(p: CheckerboardParams, tol: Optional[ToleranceProfile] = None) -> BipartiteState:
    """Checkerboard normaalvorm met parameters (u, v)."""
    return _state_from_blocks(checkerboard_canonical_blocks(p), tol)


def checkerboard_roots(p: CheckerboardParams) -> tuple[float, float]:
    """
    Positieve wortels 0 < x₁ < 1 < x₂ van
    f(x) = u²(1+v²)x⁴ − (u²v²+2u²+v²)x² + u².
    """
    u2, v2 = p.u ** 2, p.v ** 2
    coeffs = [u2 * (1 + v2), -(u2 * v2 + 2 * u2 + v2), u2]
    # discriminant = (u²v²+v²)² + 4u⁴v² > 0, dus twee positieve wortels in x²
    squares = np.sort(np.roots(coeffs).real)
    x1, x2 = np.sqrt(squares)
    return float(x1), float(x2)


def checkerboard_phi(p: CheckerboardParams, t: float) -> ProductVector:
    """
    Kernvector φ(t) = (v, tv, u(t²−1)) ⊗ (uvt², −tv, u(t²−1)).

    Rij 2 van C(a⊗b) verdwijnt precies als f(t) = 0; de andere rijen voor elke t.
    """
    u, v = p.u, p.v
    return ProductVector.from_factors(
        [v, t * v, u * (t * t - 1)],
        [u * v * t * t, -t * v, u * (t * t - 1)],
    )


def checkerboard_kernel_vectors(p: CheckerboardParams) -> list[ProductVector]:
    """
    De zes kernvectoren van de normaalvorm, in de ordening met symbool PNNpPP:
    |02⟩, φ(x₁), φ(−x₁), φ(x₂), φ(−x₂), |2⟩(|0⟩ − v|2⟩).
    """
    x1, x2 = checkerboard_roots(p)
    return [
        ProductVector.from_factors([1, 0, 0], [0, 0, 1]),
        checkerboard_phi(p, x1),
        checkerboard_phi(p, -x1),
        checkerboard_phi(p, x2),
        checkerboard_phi(p, -x2),
        ProductVector.from_factors([0, 0, 1], [1, 0, -p.v]),
    ]


def checkerboard_lambda_mu(p: CheckerboardParams) -> tuple[float, float]:
    """λ = (x₂+x₁)/(x₂−x₁) en μ = λ(1−x₁x₂)/(1+x₁x₂)."""
    x1, x2 = checkerboard_roots(p)
    lam = (x2 + x1) / (x2 - x1)
    mu = lam * (1 - x1 * x2) / (1 + x1 * x2)
    return lam, mu


def _check_lambda(lam: float) -> None:
    if not (0 < lam < 1):
        raise InvalidParameter(f"λ moet in (0, 1) liggen, kreeg {lam}")


def choi_matrix(lam: float) -> ComplexMatrix:
    """De 9×9 matrix van de Choi-familie (lege posities nul)."""
    _check_lambda(lam)
    m = np.zeros((9, 9), dtype=complex)
    for i in (0, 4, 8):
        for j in (0, 4, 8):
            m[i, j] = 1
    for i, j in ((2, 6), (6, 2), (3, 1), (1, 3), (5, 7), (7, 5)):
        m[i, j] = 1
    for i in (1, 5, 6):
        m[i, i] = lam ** 2
    for i in (2, 3, 7):
        m[i, i] = lam ** -2
    return m


def choi_state(lam: float, tol: Optional[ToleranceProfile] = None) -> BipartiteState:
    """Choi-toestand ρ_λ, 0 < λ < 1."""
    return BipartiteState.from_matrix(choi_matrix(lam), tol=tol)


# Kolommen van de A- en B-zijde van de zes Choi-kernvectoren
def _choi_columns(lam: float) -> tuple[np.ndarray, np.ndarray]:
    side_a = np.array([
        [1, 0, lam, 1, 0, -lam],
        [lam, 1, 0, -lam, 1, 0],
        [0, lam, 1, 0, -lam, 1],
    ], dtype=float)
    side_b = np.array([
        [-lam, 0, 1, lam, 0, 1],
        [1, -lam, 0, 1, lam, 0],
        [0, 1, -lam, 0, 1, lam],
    ], dtype=float)
    return side_a, side_b


def choi_kernel_vectors(lam: float) -> list[ProductVector]:
    """De zes productvectoren in de kern van ρ_λ (kolomsgewijze tensorproducten)."""
    _check_lambda(lam)
    side_a, side_b = _choi_columns(lam)
    return [ProductVector.from_factors(side_a[:, k], side_b[:, k]) for k in range(6)]


def choi_quadruple(lam: float) -> tuple[float, float, float, float]:
    """Kwadrupel (J₁ᴬ, J₂ᴬ, J₂ᴮ, J₃ᴮ) van de ppPNNp-ordening van de Choi-kern."""
    _check_lambda(lam)
    t = lam ** 3
    return ((1 + t) / 2, (1 - t) / (1 + t), -(1 + t) / (1 - t), 2 * t / (1 + t))


def choi_canonical_params(lam: float) -> CanonicalParams:
    """Gesloten vorm van Φ(choi_quadruple(λ))."""
    _check_lambda(lam)
    t = lam ** 6
    b = math.sqrt(2 * t / (1 + t))
    c = math.sqrt((3 + t) * (1 + 3 * t)) / (1 - t)
    d = math.sqrt(2 / (1 + t))
    a = (b * c * d / (2 * t)) * (1 - t * t) * (1 + 3 * t) / (3 + t) ** 2
    return CanonicalParams(a, b, c, d)
