"""
Rationale actie van de stabilisator op het blok R.

De coördinaten (a, b, c, d) zijn hier het kwadrupel (J₁ᴬ, J₂ᴬ, J₂ᴮ, J₃ᴮ),
niet de parameters van ω.
"""
from collections import Counter
from typing import Iterable, Optional, Sequence
import logging

import numpy as np
from numpy.polynomial import polynomial as P

from ..config.settings import ToleranceProfile, resolve_tolerances
from ..core.errors import DenominatorVanishes, IndeterminateSearch, OutOfBox
from ..finder import polynomials as poly
from .jinvariants import Quadruple, in_box, relative_distance

logger = logging.getLogger(__name__)


def _check(factors: dict[str, float], tol: ToleranceProfile) -> None:
    for name, value in factors.items():
        if abs(value) <= tol.eps_symbol:
            raise DenominatorVanishes(name, value)


def act_alpha(q: Sequence[float], tol: Optional[ToleranceProfile] = None) -> Quadruple:
    """Beeld onder de 5-cyclus α = (0,1,2,3,5)."""
    tol = resolve_tolerances(tol)
    a, b, c, d = (float(v) for v in q)
    e = (1 - a) + a * d * (1 - b)
    top = (1 - a * b) - c * e
    _check({
        "1-cd": 1 - c * d,
        "1-c": 1 - c,
        "1-abd": 1 - a * b * d,
        "1-b": 1 - b,
        "c": c,
        "(1-ab)-ce": top,
    }, tol)
    return (
        d * (1 - c) / (1 - c * d),
        top / ((1 - c) * (1 - a * b * d)),
        (b / c) * top / ((1 - b) * (1 - a * b * d)),
        -c * (1 - a) * (1 - a * b * d) / top,
    )


def act_beta(q: Sequence[float], tol: Optional[ToleranceProfile] = None) -> Quadruple:
    """Beeld onder de involutie β = (1,2)(4,5)."""
    tol = resolve_tolerances(tol)
    a, b, c, d = (float(v) for v in q)
    _check({
        "1-c": 1 - c,
        "1-abd": 1 - a * b * d,
        "1-cd": 1 - c * d,
        "b-c": b - c,
        "d": d,
        "1-a": 1 - a,
        "1-ab": 1 - a * b,
        "1-acd": 1 - a * c * d,
    }, tol)
    return (
        (1 - d) * (b - c) / ((1 - c) * (1 - a * b * d)),
        b * (1 - c) * (1 - a * c * d) / ((1 - c * d) * (b - c)),
        -(1 / d) * (1 - b) * (1 - a * c * d) / ((1 - a) * (b - c)),
        (1 - a) * (1 - a * b * d) / ((1 - a * b) * (1 - a * c * d)),
    )


ACTIONS = {"alpha": act_alpha, "beta": act_beta}

# Baanpunten worden gesorteerd op dit aantal significante cijfers
SORT_DIGITS = 10


def _sort_key(point: Sequence[float]) -> tuple[float, ...]:
    return tuple(float(f"{x:.{SORT_DIGITS}g}") for x in point)


def act_word(q: Sequence[float], word: Iterable[str], tol: Optional[ToleranceProfile] = None) -> Quadruple:
    """Pas de generatoren van het woord van links naar rechts toe."""
    result = tuple(float(v) for v in q)
    for letter in word:
        result = ACTIONS[letter](result, tol)
    return result


def orbit(q: Sequence[float], tol: Optional[ToleranceProfile] = None) -> list[Quadruple]:
    """
    Baan van q onder ⟨α, β⟩, lexicografisch gesorteerd.

    Raises:
        OutOfBox: q ligt niet in R
        DenominatorVanishes: een beeldpunt valt op een pool
    """
    tol = resolve_tolerances(tol)
    q = tuple(float(v) for v in q)
    if not in_box(q):
        raise OutOfBox(f"Punt {q} ligt niet in R")

    points = [q]
    frontier = [q]
    while frontier:
        nxt = []
        for point in frontier:
            for act in (act_alpha, act_beta):
                image = act(point, tol)
                if not any(relative_distance(image, p) < tol.eps_match for p in points):
                    points.append(image)
                    nxt.append(image)
        frontier = nxt
        if len(points) > 60:
            # kan niet voor een groep van orde 60; toleranties te krap
            raise IndeterminateSearch(f"Baan groeit boven 60 punten bij {q}")
    return sorted(points, key=_sort_key)


def orbit_size_histogram(points: Iterable[Sequence[float]], tol: Optional[ToleranceProfile] = None) -> dict[int, int]:
    """Baangrootte → aantal punten; diagnostiek voor de vezelgrens van 60."""
    sizes = Counter(len(orbit(p, tol)) for p in points)
    return dict(sorted(sizes.items()))


def orbit_contains(points: Sequence[Quadruple], q: Sequence[float], eps: float) -> bool:
    return any(relative_distance(p, q) < eps for p in points)


# Gereduceerd stelsel voor het vaste punt van α, in (x, y) = (b, a)
_FIXED_F1 = np.zeros((4, 3))
_FIXED_F1[3, 2], _FIXED_F1[2, 1], _FIXED_F1[1, 1] = 1, -1, 1
_FIXED_F1[0, 1], _FIXED_F1[1, 0], _FIXED_F1[0, 0] = -1, -1, 1

_FIXED_F2 = np.zeros((4, 3))
_FIXED_F2[3, 2], _FIXED_F2[2, 2], _FIXED_F2[1, 2] = 1, -1, -1
_FIXED_F2[2, 1], _FIXED_F2[1, 1], _FIXED_F2[1, 0], _FIXED_F2[0, 0] = -2, 3, 1, -1

# b = 1 is een drievoudige wortel van de resultant buiten het open blok
_ENDPOINT_MARGIN = 1e-3


def alpha_fixed_point(tol: Optional[ToleranceProfile] = None) -> Quadruple:
    """
    Het unieke punt van R dat door α (en dan door de hele groep) vastgehouden wordt.

    a en b volgen uit
        a²b³ − ab² + ab − a − b + 1 = 0,
        a²b³ − a²b² − a²b − 2ab² + 3ab + b − 1 = 0,
    daarna c = (1−b−ab+a²b²)/((1−a)(1−a−b)) en d = (a+b−1)/(1−b(1−ab)).
    """
    tol = resolve_tolerances(tol)
    f1 = _FIXED_F1.astype(complex)
    f2 = _FIXED_F2.astype(complex)
    res = poly.resultant_in_x(f1, f2)
    if res is None:
        raise IndeterminateSearch("Resultant van het vaste-puntstelsel is identiek nul")

    candidates = []
    for b in poly.univariate_roots(res):
        if abs(b.imag) > 1e-6 or not (_ENDPOINT_MARGIN < b.real < 1 - _ENDPOINT_MARGIN):
            continue
        for a in poly.univariate_roots(poly.y_polynomial(f1, b.real)):
            if abs(a.imag) > 1e-6 or not (0 < a.real < 1):
                continue
            bp, ap, _ = poly.newton_polish([f1, f2], complex(b.real), complex(a.real))
            if max(abs(P.polyval2d(bp, ap, f)) for f in (f1, f2)) < 1e-12:
                candidates.append((ap.real, bp.real))

    points = []
    for a, b in candidates:
        c = (1 - b - a * b + a * a * b * b) / ((1 - a) * (1 - a - b))
        d = (a + b - 1) / (1 - b * (1 - a * b))
        point = (a, b, c, d)
        if in_box(point) and not any(relative_distance(point, p) < 1e-9 for p in points):
            points.append(point)
    if len(points) != 1:
        raise IndeterminateSearch(f"Verwacht één vast punt in R, vond {len(points)}")

    logger.info(f"Vast punt van α: {points[0]}")
    return points[0]
