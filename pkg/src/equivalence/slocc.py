"""
SLOCC-equivalentie en canonieke vorm voor 3×3 PPTES van rang vier.

Twee zulke toestanden zijn equivalent precies als er een ordening van de
zes kernproductvectoren van de ene bestaat waarvoor de zes J-invarianten
gelijk zijn aan die van (een vaste ordening van) de andere.
"""
from dataclasses import dataclass, field
from typing import Optional, Sequence
import logging

import numpy as np
from numpy.polynomial import polynomial as P

from ..config.settings import ToleranceProfile, resolve_tolerances
from ..core.errors import (
    IndeterminateSearch,
    InvalidParameter,
    NoPpPNNpOrdering,
    ReconstructionFailed,
    RootMismatch,
    UnsupportedClass,
)
from ..core.product import ProductVector
from ..core.qmat import StateLike, birank, is_ppt
from ..finder.product_vectors import SearchStatus, in_general_position, kernel_product_vectors
from ..invariants.action import orbit, orbit_contains
from ..invariants.group import Ordering, apply_ordering
from ..invariants.jinvariants import (
    PPPNNP,
    InvariantTuple,
    Quadruple,
    all_orderings,
    ordering_symbols,
    relative_distance,
    sextuple_invariants,
)
from ..invariants.phi import phi
from ..states.builders import CanonicalParams, omega

logger = logging.getLogger(__name__)


@dataclass
class EquivalenceVerdict:
    """Uitkomst van is_equivalent; `residual` is de kleinste gevonden afstand."""
    equivalent: bool
    residual: float
    permutation: Optional[Ordering] = None
    matched: Optional[tuple[InvariantTuple, InvariantTuple]] = None

    def to_dict(self) -> dict:
        return {
            "equivalent": self.equivalent,
            "residual": self.residual,
            "permutation": list(self.permutation) if self.permutation is not None else None,
            "matched": [list(t.as_tuple()) for t in self.matched] if self.matched else None,
        }


@dataclass
class CanonicalForm:
    """Canonieke parameters met de gebruikte ordening en het kwadrupel."""
    params: CanonicalParams
    ordering: Ordering
    quadruple: Quadruple
    sextuple: list[ProductVector] = field(default_factory=list, repr=False)

    def to_dict(self) -> dict:
        return {
            "params": self.params.to_dict(),
            "ordering": list(self.ordering),
            "quadruple": list(self.quadruple),
        }


def require_rank4_ppt(rho: StateLike, tol: Optional[ToleranceProfile] = None) -> None:
    """
    Raises:
        UnsupportedClass: ρ heeft geen birang (4,4) of is niet PPT
    """
    ranks = birank(rho, tol)
    if ranks != (4, 4):
        raise UnsupportedClass(f"Verwacht birang (4, 4), kreeg {ranks}")
    if not is_ppt(rho, tol):
        raise UnsupportedClass("Toestand is niet PPT")


def kernel_sextuple(rho: StateLike, tol: Optional[ToleranceProfile] = None) -> list[ProductVector]:
    """
    De zes productvectoren in de kern van een rang-vier PPTES.

    Raises:
        UnsupportedClass: geen 3×3 PPTES van birang (4,4), of de kern bevat
            niet precies zes productvectoren in algemene positie
        IndeterminateSearch: de zoeker kon niet beslissen
    """
    require_rank4_ppt(rho, tol)
    result = kernel_product_vectors(rho, tol)
    if result.status == SearchStatus.INDETERMINATE:
        raise IndeterminateSearch(result.message)
    if result.status != SearchStatus.FINITE or len(result.vectors) != 6:
        raise UnsupportedClass(
            f"Kern bevat geen zes productvectoren (status {result.status.value}, {len(result.vectors)} gevonden)"
        )
    if not in_general_position(result.vectors, tol):
        raise UnsupportedClass("Kernproductvectoren zijn niet in algemene positie")
    return result.vectors


def invariants_by_ordering(s: Sequence[ProductVector], tol: Optional[ToleranceProfile] = None) -> dict[Ordering, InvariantTuple]:
    """Invarianten per ordening (720), per begin-vijftal één keer berekend."""
    cache: dict[tuple[int, ...], InvariantTuple] = {}
    result = {}
    for order in all_orderings():
        prefix = order[:5]
        if prefix not in cache:
            cache[prefix] = sextuple_invariants(apply_ordering(s, order), tol)
        result[order] = cache[prefix]
    return result


def equivalent_sextuples(
    left: Sequence[ProductVector],
    right: Sequence[ProductVector],
    tol: Optional[ToleranceProfile] = None,
    prefilter: bool = False,
) -> EquivalenceVerdict:
    """Vergelijk alle ordeningen van `left` met de gegeven ordening van `right`."""
    tol = resolve_tolerances(tol)
    reference = sextuple_invariants(list(right), tol)
    symbols = ordering_symbols(left, tol) if prefilter else None
    ref_symbol = None
    if prefilter:
        ref_symbol = ordering_symbols(right, tol)[tuple(range(6))]

    best = float("inf")
    for order, inv in invariants_by_ordering(left, tol).items():
        if symbols is not None and symbols[order] != ref_symbol:
            continue
        distance = relative_distance(inv.as_tuple(), reference.as_tuple())
        best = min(best, distance)
        if distance < tol.eps_match:
            logger.debug(f"Equivalent via ordening {order} (residu {distance:.2e})")
            return EquivalenceVerdict(True, distance, order, (inv, reference))
    return EquivalenceVerdict(False, best)


def is_equivalent(
    rho: StateLike,
    other: StateLike,
    tol: Optional[ToleranceProfile] = None,
    prefilter: bool = False,
) -> EquivalenceVerdict:
    """
    Beslis SLOCC-equivalentie van twee 3×3 PPTES van rang vier.

    Raises:
        UnsupportedClass: een van beide valt buiten de klasse
    """
    left = kernel_sextuple(rho, tol)
    right = kernel_sextuple(other, tol)
    verdict = equivalent_sextuples(left, right, tol, prefilter)
    logger.info(f"Equivalentie: {verdict.equivalent} (residu {verdict.residual:.2e})")
    return verdict


def find_ordering(
    s: Sequence[ProductVector],
    symbol: str,
    tol: Optional[ToleranceProfile] = None,
) -> Optional[Ordering]:
    """Eerste ordening (lexicografisch) met het gegeven symbool."""
    for order, sym in ordering_symbols(s, tol).items():
        if sym == symbol:
            return order
    return None


def pppnnp_quadruples(s: Sequence[ProductVector], tol: Optional[ToleranceProfile] = None) -> dict[Ordering, Quadruple]:
    """Kwadrupels van alle ordeningen met symbool ppPNNp."""
    symbols = ordering_symbols(s, tol)
    invariants = invariants_by_ordering(s, tol)
    return {order: invariants[order].quadruple for order, sym in symbols.items() if sym == PPPNNP}


def canonical_form(rho: StateLike, tol: Optional[ToleranceProfile] = None, verify: bool = True) -> CanonicalForm:
    """
    Canonieke vorm ω(Φ(q)) met q het kwadrupel van de eerste ppPNNp-ordening.

    Raises:
        NoPpPNNpOrdering: geen ppPNNp-ordening (defect)
        ReconstructionFailed: ω(resultaat) is niet equivalent met ρ
    """
    s = kernel_sextuple(rho, tol)
    order = find_ordering(s, PPPNNP, tol)
    if order is None:
        raise NoPpPNNpOrdering("Geen ordening met symbool ppPNNp in de kern")
    q = sextuple_invariants(apply_ordering(s, order), tol).quadruple
    params = phi(q)
    logger.info(f"Canonieke vorm via ordening {order}: {params}")

    if verify:
        verdict = equivalent_sextuples(kernel_sextuple(omega(params, tol), tol), s, tol)
        if not verdict.equivalent:
            raise ReconstructionFailed(f"ω{params.as_tuple()} niet equivalent (residu {verdict.residual:.2e})")
    return CanonicalForm(params, order, q, s)


def canonicalize(rho: StateLike, tol: Optional[ToleranceProfile] = None) -> CanonicalParams:
    """Parameters (a, b, c, d) met ω(a,b,c,d) SLOCC-equivalent aan ρ."""
    return canonical_form(rho, tol).params


def quadruple_orbit_membership(rho: StateLike, q: Sequence[float], tol: Optional[ToleranceProfile] = None) -> bool:
    """Ligt q in de baan van het ppPNNp-kwadrupel van ρ?"""
    tol = resolve_tolerances(tol)
    form = canonical_form(rho, tol, verify=False)
    return orbit_contains(orbit(form.quadruple, tol), q, tol.eps_match)


def cubic_coefficients(p: CanonicalParams) -> np.ndarray:
    """
    Oplopende coëfficiënten van
    f(z) = abz(cz−1−d²)(c−(1+c²)z) + d(cz−1)(b²c−(1+b²+b²c²)z).
    """
    a, b, c, d = p.as_tuple()
    first = P.polymul(P.polymul([0, a * b], [-(1 + d * d), c]), [c, -(1 + c * c)])
    second = P.polymul([-d, d * c], [b * b * c, -(1 + b * b + b * b * c * c)])
    return P.polyadd(first, second)


def quadruple_for_params(p: CanonicalParams, tol: Optional[ToleranceProfile] = None) -> Quadruple:
    """
    Een ppPNNp-kwadrupel q van de kern van ω(p) met Φ(q) = p.

    Raises:
        InvalidParameter: geen enkele ppPNNp-ordening geeft p terug
    """
    tol = resolve_tolerances(tol)
    s = kernel_sextuple(omega(p, tol), tol)
    for q in pppnnp_quadruples(s, tol).values():
        if relative_distance(phi(q).as_tuple(), p.as_tuple()) < tol.eps_match:
            return q
    raise InvalidParameter(f"Geen kwadrupel met Φ(q) = {p.as_tuple()}")


def cubic_roots_check(
    p: CanonicalParams,
    q: Optional[Sequence[float]] = None,
    tol: Optional[ToleranceProfile] = None,
) -> tuple[float, float, float]:
    """
    Wortels z₁, z₂, z₃ van de kubische f in gesloten vorm, gecontroleerd.

    Raises:
        RootMismatch: gesloten vormen wijken af van de numerieke wortels of
            schenden de ordeningen z₃ < 0, λ < z₁ < c/(1+c²), 1/c < z₂ < (1+d²)/c
    """
    if q is None:
        q = quadruple_for_params(p, tol)
    x, y, z, w = (float(v) for v in q)
    a, b, c, d = p.as_tuple()

    z1 = (w / c) * (1 - x * z) / (1 - x * z * w)
    z2 = z1 / w
    z3 = -(1 / c) * (1 - y) * (1 - x * z) / ((1 - x) * (y - z))

    coeffs = cubic_coefficients(p)
    scale = float(np.linalg.norm(coeffs))
    numeric = np.roots(coeffs[::-1])
    if np.max(np.abs(numeric.imag)) > 1e-9 * (1 + np.max(np.abs(numeric))):
        raise RootMismatch(f"f heeft niet drie reële wortels: {numeric}")

    for name, root in (("z1", z1), ("z2", z2), ("z3", z3)):
        value = abs(P.polyval(root, coeffs))
        if value > 1e-9 * scale * max(1.0, abs(root)) ** 3:
            raise RootMismatch(f"|f({name})| = {value:.2e} te groot")
        if np.min(np.abs(numeric - root)) > 1e-9 * (1 + abs(root)) * 1e3:
            raise RootMismatch(f"{name} = {root} ligt niet bij een numerieke wortel")

    lam = b * b * c / (1 + b * b + b * b * c * c)
    if not z3 < 0:
        raise RootMismatch(f"z3 = {z3} is niet negatief")
    if not lam < z1 < c / (1 + c * c):
        raise RootMismatch(f"z1 = {z1} niet in ({lam}, {c / (1 + c * c)})")
    if not 1 / c < z2 < (1 + d * d) / c:
        raise RootMismatch(f"z2 = {z2} niet in ({1 / c}, {(1 + d * d) / c})")
    return z1, z2, z3
