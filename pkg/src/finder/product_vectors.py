"""
Productvectorzoeker voor deelruimten van C³⊗C³.

|a⟩⊗|b⟩ ligt in de deelruimte precies als ⟨w_j|a⊗b⟩ = aᵀ W_j b = 0 voor
alle k vectoren w_j van het orthogonale complement. Voor vaste |a⟩ is dat
een lineair stelsel M(a)|b⟩ = 0; er is een oplossing zodra alle 3×3
minoren van M(a) verdwijnen. De minoren zijn polynomen van graad ≤ 3 in
de kaartcoördinaten (x, y) van |a⟩.
"""
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Optional, Sequence
import logging

import numpy as np
from scipy import linalg
from scipy.stats import unitary_group

from ..config.settings import FinderConfig, ToleranceProfile, resolve_tolerances, settings
from ..core.errors import IndeterminateSearch, InvalidParameter
from ..core.product import ProductVector
from ..core.qmat import StateLike, kernel_basis, numerical_rank, range_basis
from . import polynomials as poly

logger = logging.getLogger(__name__)


# Tweede singuliere waarde van M(a) onder deze fractie: |b⟩ niet uniek
NULLITY_CUTOFF = 1e-7

# Drempel voor "minoren verdwijnen" bij de steekproeven langs een kromme
CURVE_SAMPLE_TOL = 1e-8

# Gepolijste kandidaat met residu tussen residual_tol en deze waarde: onbeslist
INDETERMINATE_BAND = 1e-6


class SearchStatus(str, Enum):
    """Uitkomst van een zoektocht naar productvectoren."""
    FINITE = "Finite"
    INFINITE = "Infinite"
    INDETERMINATE = "Indeterminate"


@dataclass
class SubspaceSpec:
    """
    Deelruimte van C⁹ gegeven door een orthonormale basis van het complement.

    `constraints` heeft vorm (k, 9); de dimensie van de deelruimte is 9 − k.
    """
    constraints: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.constraints, dtype=complex).reshape(-1, 9)
        if c.shape[0] > 0:
            if numerical_rank(c) < c.shape[0]:
                raise InvalidParameter("Complementvectoren zijn lineair afhankelijk")
            c = linalg.orth(c.T).T
        self.constraints = c

    @property
    def k(self) -> int:
        return int(self.constraints.shape[0])

    @property
    def dimension(self) -> int:
        return 9 - self.k

    @classmethod
    def from_basis(cls, basis) -> "SubspaceSpec":
        """Deelruimte opgespannen door de kolommen van `basis` (9×d)."""
        basis = np.asarray(basis, dtype=complex).reshape(9, -1)
        return cls(constraints=linalg.null_space(basis.conj().T).T)

    def contains(self, vector, tol: float = 1e-10) -> bool:
        v = np.asarray(vector, dtype=complex).ravel()
        v = v / np.linalg.norm(v)
        return bool(self.k == 0 or np.max(np.abs(self.constraints.conj() @ v)) < tol)

    def matrices(self) -> np.ndarray:
        """W_j = conj(w_j) als 3×3 matrix, vorm (k, 3, 3)."""
        return self.constraints.conj().reshape(self.k, 3, 3)


@dataclass
class PVSearchResult:
    """Resultaat van find_product_vectors."""
    status: SearchStatus
    vectors: list[ProductVector] = field(default_factory=list)
    message: str = ""

    @property
    def count(self) -> Optional[int]:
        return len(self.vectors) if self.status == SearchStatus.FINITE else None

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "count": self.count,
            "vectors": [v.to_dict() for v in self.vectors],
            "message": self.message,
        }


def kernel_subspace(rho: StateLike, tol: Optional[ToleranceProfile] = None) -> SubspaceSpec:
    """Kern van ρ; het complement is het bereik."""
    return SubspaceSpec(constraints=range_basis(rho, tol).T)


def range_subspace(rho: StateLike, tol: Optional[ToleranceProfile] = None) -> SubspaceSpec:
    """Bereik van ρ; het complement is de kern."""
    return SubspaceSpec(constraints=kernel_basis(rho, tol).T)


class _Chart:
    """Eén affiene kaart a' = base + x·dir_x + y·dir_y in geroteerde coördinaten."""

    def __init__(self, name: str, rotation: np.ndarray, base, dir_x, dir_y):
        self.name = name
        self.rotation = rotation
        self.base = np.asarray(base, dtype=complex)
        self.dir_x = np.asarray(dir_x, dtype=complex)
        self.dir_y = np.asarray(dir_y, dtype=complex)

    def point(self, x: complex, y: complex) -> np.ndarray:
        return self.rotation @ (self.base + x * self.dir_x + y * self.dir_y)


class _Search:
    """Eén zoektocht; houdt kandidaten en de uiteindelijke status bij."""

    def __init__(self, spec: SubspaceSpec, config: FinderConfig, tol: ToleranceProfile):
        self.spec = spec
        self.config = config
        self.tol = tol
        self.w = spec.matrices()
        self.rng = np.random.default_rng(config.chart_seed)
        self.rotation = unitary_group.rvs(3, random_state=self.rng)
        # andere basis van het complement: zelfde deelruimte, generieke minoren
        mixing = unitary_group.rvs(spec.k, random_state=self.rng)
        # rij j van M(a') is a'ᵀ (Uᵀ W_j)
        self.w_rot = np.einsum("lj,ia,jib->lab", mixing, self.rotation, self.w)
        self.found: list[ProductVector] = []
        self.infinite_reason: Optional[str] = None
        self.indeterminate_reason: Optional[str] = None

    # Verificatie

    def m_matrix(self, a: np.ndarray) -> np.ndarray:
        return np.einsum("i,jic->jc", a, self.w)

    def accept(self, a: np.ndarray, chart: str) -> None:
        """Controleer een kandidaat |a⟩ en voeg a⊗b toe als alles klopt."""
        a = a / np.linalg.norm(a)
        m = self.m_matrix(a)
        _, s, vh = linalg.svd(m)
        top = max(s[0], 1e-300)
        if s.size >= 2 and s[1] <= NULLITY_CUTOFF * top:
            self.infinite_reason = f"M(a) heeft nulliteit ≥ 2 in kaart {chart}"
            return
        b = vh[-1].conj()
        residual = float(np.max(np.abs(m @ b))) if m.size else 0.0
        if residual >= self.config.residual_tol:
            if residual < INDETERMINATE_BAND:
                self.indeterminate_reason = (
                    f"Kandidaat in kaart {chart} convergeerde niet (residu {residual:.2e})"
                )
            else:
                logger.debug(f"Kandidaat in kaart {chart} verworpen (residu {residual:.2e})")
            return
        pv = ProductVector.from_factors(a, b)
        if any(pv.distance(other) < self.config.dedup_tol for other in self.found):
            return
        logger.debug(f"Productvector gevonden in kaart {chart}: {pv}")
        self.found.append(pv)

    # Kaarten

    def minors(self, chart: _Chart) -> list[np.ndarray]:
        entries = poly.linear_entries(self.w_rot, chart.base, chart.dir_x, chart.dir_y)
        return poly.minor_polynomials(entries)

    def search_plane(self) -> None:
        """Kaart a' = (1, x, y)."""
        chart = _Chart("0", self.rotation, [1, 0, 0], [0, 1, 0], [0, 0, 1])
        raw = self.minors(chart)
        norms = np.array([poly.coefficient_norm(c) for c in raw])
        if norms.max() <= 1e-12:
            self.infinite_reason = "Alle minoren zijn identiek nul"
            return
        # aflopend op coëfficiëntnorm; minoren die identiek nul zijn vallen weg
        order = [i for i in np.argsort(-norms) if norms[i] > poly.COEFF_CUTOFF * norms.max()]
        significant = [raw[i] / norms[i] for i in order]

        x_roots = self.eliminate(significant)
        if x_roots is None:
            self.check_curve(significant, chart)
            return

        for x in x_roots:
            for y in self.back_substitute(significant, x):
                if poly.normalized_residual(significant, x, y) >= self.config.candidate_tol:
                    continue
                xp, yp, converged = poly.newton_polish(significant, x, y, self.config.newton_max_iter)
                if not converged:
                    logger.debug(f"Newton niet geconvergeerd bij x={x:.4g}, y={y:.4g}")
                self.accept(chart.point(xp, yp), chart.name)

    def eliminate(self, minors: list[np.ndarray]) -> Optional[np.ndarray]:
        """
        x-wortels van de resultant van een minorpaar.

        `minors` is aflopend gesorteerd op coëfficiëntnorm; paren met de
        grootste normen eerst, daarna twee willekeurige combinaties van alle
        minoren. None als alle resultanten identiek nul zijn.
        """
        pairs = sorted(combinations(range(len(minors)), 2), key=lambda ij: (ij[0] + ij[1], ij))
        for i, j in pairs:
            res = poly.resultant_in_x(minors[i], minors[j], self.config.resultant_samples)
            if res is not None:
                logger.debug(f"Resultant van minoren {i},{j} (graad {len(res) - 1})")
                return poly.univariate_roots(res)
            logger.debug(f"Resultant van minoren {i},{j} gedegenereerd")

        if len(minors) < 2:
            return None
        weights = self.rng.normal(size=(2, len(minors))) + 1j * self.rng.normal(size=(2, len(minors)))
        g1 = poly.normalize(sum(wt * c for wt, c in zip(weights[0], minors)))
        g2 = poly.normalize(sum(wt * c for wt, c in zip(weights[1], minors)))
        res = poly.resultant_in_x(g1, g2, self.config.resultant_samples)
        if res is None:
            return None
        logger.warning("Alle minorparen gedegenereerd; willekeurige combinaties gebruikt")
        return poly.univariate_roots(res)

    def back_substitute(self, minors: list[np.ndarray], x: complex) -> np.ndarray:
        """y-wortels van de grootste minor die bij deze x echt van y afhangt."""
        candidates = sorted(minors, key=lambda c: -np.linalg.norm(poly.y_polynomial(c, x)))
        for c in candidates:
            coeffs = poly.y_polynomial(c, x)
            if np.linalg.norm(coeffs[1:]) > 1e-10 * np.linalg.norm(coeffs):
                return poly.univariate_roots(coeffs)
        return np.array([], dtype=complex)

    def check_curve(self, minors: list[np.ndarray], chart: _Chart) -> None:
        """
        Alle resultanten identiek nul: controleer een kromme van oplossingen
        met steekproeven in willekeurige x.
        """
        hits = 0
        for _ in range(self.config.infinite_samples):
            x = complex(self.rng.normal(), self.rng.normal())
            ok = False
            for y in self.back_substitute(minors, x):
                if poly.normalized_residual(minors, x, y) < CURVE_SAMPLE_TOL:
                    ok = True
                    break
            hits += ok
        if hits == self.config.infinite_samples:
            self.infinite_reason = f"Minoren hebben een gemeenschappelijke factor ({hits} steekproeven)"
        else:
            self.indeterminate_reason = (
                f"Resultanten gedegenereerd maar slechts {hits}/{self.config.infinite_samples} steekproeven op de kromme"
            )

    def search_line(self) -> None:
        """Kaart a' = (0, 1, x)."""
        chart = _Chart("1", self.rotation, [0, 1, 0], [0, 0, 1], [0, 0, 0])
        raw = self.minors(chart)
        norms = np.array([poly.coefficient_norm(c) for c in raw])
        if norms.max() <= 1e-12:
            self.infinite_reason = "Alle minoren verdwijnen op de lijn a'₀ = 0"
            return
        significant = [c / n for c, n in zip(raw, norms) if n > poly.COEFF_CUTOFF * norms.max()]
        best = max(significant, key=poly.coefficient_norm)
        for x in poly.univariate_roots(best[:, 0]):
            if poly.normalized_residual(significant, x, 0) >= self.config.candidate_tol:
                continue
            xp, _, _ = poly.newton_polish(significant, x, 0j, self.config.newton_max_iter, univariate=True)
            self.accept(chart.point(xp, 0), chart.name)

    def search_point(self) -> None:
        """Kaart a' = (0, 0, 1)."""
        a = self.rotation @ np.array([0, 0, 1], dtype=complex)
        s = linalg.svdvals(self.m_matrix(a))
        if s[-1] <= self.tol.eps_rank * max(s[0], 1e-300):
            self.accept(a, "2")


def find_product_vectors(
    spec: SubspaceSpec,
    tol: Optional[ToleranceProfile] = None,
    config: Optional[FinderConfig] = None,
) -> PVSearchResult:
    """
    Vind alle productvectoren in een deelruimte.

    Returns:
        PVSearchResult met status Finite (en de vectoren, lexicografisch
        gesorteerd), Infinite of Indeterminate.
    """
    tol = resolve_tolerances(tol)
    config = config or settings.finder

    if spec.k <= 3:
        # M(a) heeft hoogstens 3 rijen: det M(a) = 0 is een kromme (of alles)
        return PVSearchResult(SearchStatus.INFINITE, message=f"Deelruimte van dimensie {spec.dimension} ≥ 6")

    search = _Search(spec, config, tol)
    search.search_plane()
    if search.infinite_reason is None:
        search.search_line()
    if search.infinite_reason is None:
        search.search_point()

    if search.infinite_reason is not None:
        logger.info(f"Oneindig veel productvectoren: {search.infinite_reason}")
        return PVSearchResult(SearchStatus.INFINITE, message=search.infinite_reason)
    if search.indeterminate_reason is not None:
        logger.warning(f"Zoektocht onbeslist: {search.indeterminate_reason}")
        return PVSearchResult(
            SearchStatus.INDETERMINATE,
            vectors=sorted(search.found, key=ProductVector.sort_key),
            message=search.indeterminate_reason,
        )

    vectors = sorted(search.found, key=ProductVector.sort_key)
    logger.info(f"{len(vectors)} productvectoren gevonden in deelruimte van dimensie {spec.dimension}")
    return PVSearchResult(SearchStatus.FINITE, vectors=vectors)


def kernel_product_vectors(
    rho: StateLike,
    tol: Optional[ToleranceProfile] = None,
    config: Optional[FinderConfig] = None,
) -> PVSearchResult:
    return find_product_vectors(kernel_subspace(rho, tol), tol, config)


def range_product_vectors(
    rho: StateLike,
    tol: Optional[ToleranceProfile] = None,
    config: Optional[FinderConfig] = None,
) -> PVSearchResult:
    return find_product_vectors(range_subspace(rho, tol), tol, config)


def is_ces(
    spec: SubspaceSpec,
    tol: Optional[ToleranceProfile] = None,
    config: Optional[FinderConfig] = None,
) -> bool:
    """
    Bevat de deelruimte geen enkele productvector?

    Raises:
        IndeterminateSearch: de zoeker kon niet beslissen
    """
    result = find_product_vectors(spec, tol, config)
    if result.status == SearchStatus.INDETERMINATE:
        raise IndeterminateSearch(result.message)
    return result.status == SearchStatus.FINITE and not result.vectors


def is_entangled_rank4(rho: StateLike, tol: Optional[ToleranceProfile] = None) -> bool:
    """Een PPT-toestand van rang vier is verstrengeld precies als zijn bereik een CES is."""
    return is_ces(range_subspace(rho, tol), tol)


def _independent(vectors: Sequence[np.ndarray], tol: ToleranceProfile) -> bool:
    m = np.column_stack([v / np.linalg.norm(v) for v in vectors])
    s = linalg.svdvals(m)
    return bool(s[-1] > tol.eps_rank * s[0])


def in_general_position(vs: Sequence[ProductVector], tol: Optional[ToleranceProfile] = None) -> bool:
    """
    Elke deelverzameling van ≤ 3 A-vectoren en van ≤ 3 B-vectoren is
    lineair onafhankelijk.
    """
    tol = resolve_tolerances(tol)
    for side in ("a", "b"):
        vectors = [getattr(v, side) for v in vs]
        for size in (2, 3):
            for subset in combinations(vectors, size):
                if not _independent(subset, tol):
                    return False
    return True
