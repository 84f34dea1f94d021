"""
Herkenning en reductie van checkerboard-toestanden.

De normaalvorm met parameters (u, v) is uniek op u ↔ 1/u na: verwisselen
van de A-blokken C₀ en C₂ en opnieuw reduceren geeft (1/u, v). We
rapporteren steeds de representant met u ≥ 1.
"""
from dataclasses import dataclass
from typing import Optional
import logging
import math

import numpy as np
from scipy import linalg

from ..config.settings import ToleranceProfile, resolve_tolerances
from ..core.errors import DegenerateCombination, NotEntangled, NotPPT, ReconstructionFailed
from ..core.qmat import StateLike, is_ppt
from ..finder import polynomials as poly
from ..finder.product_vectors import is_entangled_rank4
from ..invariants.group import Ordering
from ..invariants.jinvariants import ordering_symbols
from ..states.builders import (
    CheckerboardParams,
    CheckerboardRaw,
    checkerboard_canonical,
    checkerboard_canonical_blocks,
    checkerboard_raw,
)
from .slocc import equivalent_sextuples, invariants_by_ordering, kernel_sextuple

logger = logging.getLogger(__name__)


CHECKERBOARD_SYMBOL = "PNNpPP"

# relatieve drempel voor de tussenstappen van de reductie
STEP_TOL = 1e-8


@dataclass
class CheckerboardVerdict:
    """Uitkomst van checkerboard_class."""
    is_checkerboard: bool
    params: Optional[CheckerboardParams] = None
    lam: Optional[float] = None
    mu: Optional[float] = None
    ordering: Optional[Ordering] = None

    def to_dict(self) -> dict:
        return {
            "is_checkerboard": self.is_checkerboard,
            "params": self.params.to_dict() if self.params else None,
            "lambda": self.lam,
            "mu": self.mu,
            "ordering": list(self.ordering) if self.ordering is not None else None,
        }


def representative(u: float, v: float) -> CheckerboardParams:
    """Representant met u ≥ 1 van de klasse {(u, v), (1/u, v)}."""
    return CheckerboardParams(max(u, 1 / u), v)


def params_from_lambda_mu(lam: float, mu: float) -> Optional[CheckerboardParams]:
    """
    Inverse van (u, v) ↦ (λ, μ):
    v = 2√(λμ)/(λ−μ), w = 2((λ−μ)/(λ+μ))((λ²+1)/(λ²−1)),
    u² = v²/((1+v²)(w−1)−1).

    Geeft None als (λ, μ) niet bij een checkerboard-toestand hoort.
    """
    if not (lam > 1 and 0 < mu < 1 and lam > mu):
        return None
    v = 2 * math.sqrt(lam * mu) / (lam - mu)
    w = 2 * ((lam - mu) / (lam + mu)) * ((lam * lam + 1) / (lam * lam - 1))
    denominator = (1 + v * v) * (w - 1) - 1
    if not denominator > 0:
        return None
    return CheckerboardParams(math.sqrt(v * v / denominator), v)


def checkerboard_class(
    rho: StateLike,
    tol: Optional[ToleranceProfile] = None,
    verify: bool = True,
) -> CheckerboardVerdict:
    """
    Is ρ SLOCC-equivalent aan een checkerboard-toestand?

    Zoekt een PNNpPP-ordening met J₂ᴬ = J₃ᴬ en J₂ᴮ = J₃ᴮ; dan is het zestal
    (1/μ², −μ, −μ, 1/λ², λ, λ).

    Raises:
        UnsupportedClass: ρ is geen 3×3 PPTES van birang (4,4)
        ReconstructionFailed: de gevonden normaalvorm is niet equivalent met ρ
    """
    tol = resolve_tolerances(tol)
    s = kernel_sextuple(rho, tol)
    symbols = ordering_symbols(s, tol)
    invariants = invariants_by_ordering(s, tol)

    for order, symbol in symbols.items():
        if symbol != CHECKERBOARD_SYMBOL:
            continue
        t = invariants[order]
        if abs(t.j2a - t.j3a) > tol.eps_match * (1 + abs(t.j3a)):
            continue
        if abs(t.j2b - t.j3b) > tol.eps_match * (1 + abs(t.j3b)):
            continue
        lam = (t.j2b + t.j3b) / 2
        mu = -(t.j2a + t.j3a) / 2
        found = params_from_lambda_mu(lam, mu)
        if found is None:
            continue
        if found.u < 1:
            # andere representant: (λ, μ) ↦ (1/μ, 1/λ)
            lam, mu = 1 / mu, 1 / lam
        params = representative(found.u, found.v)
        logger.info(f"Checkerboard via ordening {order}: λ={lam:.6g}, μ={mu:.6g}, {params}")

        if verify:
            verdict = equivalent_sextuples(kernel_sextuple(checkerboard_canonical(params, tol), tol), s, tol)
            if not verdict.equivalent:
                raise ReconstructionFailed(f"Normaalvorm {params} niet equivalent (residu {verdict.residual:.2e})")
        return CheckerboardVerdict(True, params, lam, mu, order)

    return CheckerboardVerdict(False)


# Reductie van algemene checkerboard-blokken

def _scale(blocks: list[np.ndarray]) -> float:
    return max(1.0, max(float(np.max(np.abs(b))) for b in blocks))


def _rotate_rows(blocks: list[np.ndarray], rows: tuple[int, int], x: np.ndarray) -> None:
    """Unitaire Givens-rotatie die (x₀, x₁) op rijen `rows` naar (‖x‖, 0) stuurt."""
    norm = float(np.linalg.norm(x))
    q = np.array([[np.conj(x[0]), np.conj(x[1])], [-x[1], x[0]]]) / norm
    idx = list(rows)
    for b in blocks:
        b[idx, :] = q @ b[idx, :]


def _right_multiply(blocks: list[np.ndarray], t: np.ndarray) -> list[np.ndarray]:
    return [b @ t for b in blocks]


def _combination(blocks: list[np.ndarray], scale: float) -> complex:
    """Kies t zodat het even blok van C₀ + tC₂ rang één heeft."""
    c0, c2 = blocks[0], blocks[2]
    a, d, j, m = c0[0, 0], c0[0, 2], c0[2, 0], c0[2, 2]
    b, e, k, n = c2[0, 0], c2[0, 2], c2[2, 0], c2[2, 2]
    coeffs = np.array([a * m - d * j, a * n + b * m - d * k - e * j, b * n - e * k])

    candidates = list(poly.univariate_roots(coeffs)) if np.max(np.abs(coeffs)) > 0 else []
    if abs(coeffs[0]) <= STEP_TOL * scale * scale:
        candidates.append(0j)

    for t in sorted(candidates, key=abs):
        combo = c0 + t * c2
        sv = linalg.svdvals(combo[np.ix_([0, 2], [0, 2])])
        odd = combo[[1, 3], 1]
        if sv[0] > STEP_TOL * scale and sv[1] <= 1e-9 * sv[0] and np.linalg.norm(odd) > STEP_TOL * scale:
            return complex(t)
    raise DegenerateCombination("Geen combinatie C₀ + tC₂ met even blok van rang één")


def _require_small(name: str, value: complex, scale: float) -> None:
    if abs(value) > STEP_TOL * scale:
        raise NotPPT(f"{name} = {value:.3e} ≠ 0; toestand kan niet PPT zijn")


def checkerboard_reduce(
    r: CheckerboardRaw,
    tol: Optional[ToleranceProfile] = None,
    verify: bool = True,
) -> CheckerboardParams:
    """
    Breng algemene checkerboard-blokken met lokale operaties naar de
    normaalvorm en lees (u, v) af.

    Raises:
        NotPPT: ρ is niet PPT of een PPT-relatie faalt onderweg
        NotEntangled: het bereik bevat een productvector, of chlr = 0
        DegenerateCombination: een benodigde deler verdwijnt
        ReconstructionFailed: de normaalvorm is niet equivalent met de invoer
    """
    tol = resolve_tolerances(tol)
    rho = checkerboard_raw(r, tol)
    if not is_ppt(rho, tol):
        raise NotPPT("Partiële transpositie heeft een negatieve eigenwaarde")
    if not is_entangled_rank4(rho, tol):
        raise NotEntangled("Bereik bevat productvectoren")

    blocks = [b.copy() for b in r.blocks()]
    scale = _scale(blocks)

    # C₀ ← C₀ + tC₂ met am = dj
    t = _combination(blocks, scale)
    blocks[0] = blocks[0] + t * blocks[2]
    logger.debug(f"Combinatie t = {t:.6g}")

    # even blok van C₀ is u mᵀ; roteer u en de oneven kolom naar e₀
    u_svd, s_svd, _ = linalg.svd(blocks[0][np.ix_([0, 2], [0, 2])])
    _rotate_rows(blocks, (0, 2), u_svd[:, 0] * s_svd[0])
    _rotate_rows(blocks, (1, 3), blocks[0][[1, 3], 1].copy())

    m0, m2 = blocks[0][0, 0], blocks[0][0, 2]
    g = blocks[0][1, 1]
    t_matrix = np.zeros((3, 3), dtype=complex)
    if abs(m0) >= abs(m2):
        t_matrix[0, 0], t_matrix[0, 2], t_matrix[2, 2] = 1 / m0, -m2 / m0, 1
    else:
        t_matrix[2, 0], t_matrix[0, 2], t_matrix[2, 2] = 1 / m2, 1, -m0 / m2
    t_matrix[1, 1] = 1 / g
    blocks = _right_multiply(blocks, t_matrix)

    target = np.zeros((4, 3), dtype=complex)
    target[0, 0] = target[1, 1] = 1
    if np.max(np.abs(blocks[0] - target)) > STEP_TOL * _scale(blocks):
        raise DegenerateCombination("C₀ kon niet naar diag(1, 1) gebracht worden")
    blocks[0] = target.copy()
    scale = _scale(blocks)

    _require_small("e", blocks[2][0, 2], scale)
    _require_small("i", blocks[1][1, 2], scale)

    # C₂ ← C₂ − bC₀, daarna p wegwerken met kolom 0 += σ·kolom 2
    blocks[2] = blocks[2] - blocks[2][0, 0] * blocks[0]
    p, s = blocks[1][3, 0], blocks[1][3, 2]
    if abs(s) <= STEP_TOL * scale:
        raise DegenerateCombination("s = 0")
    shear = np.eye(3, dtype=complex)
    shear[2, 0] = -p / s
    blocks = _right_multiply(blocks, shear)

    f = blocks[1][1, 0]
    if abs(f) <= STEP_TOL * scale:
        raise DegenerateCombination("f = 0")
    blocks[1] = blocks[1] / f
    blocks = _right_multiply(blocks, np.diag([1, 1, 1 / blocks[1][3, 2]]))
    n = blocks[2][2, 2]
    if abs(n) <= STEP_TOL * scale:
        raise DegenerateCombination("n = 0")
    blocks[2] = blocks[2] / n

    c, l = blocks[1][0, 1], blocks[1][2, 1]
    h, k, rr = blocks[2][1, 1], blocks[2][2, 0], blocks[2][3, 1]
    logger.debug(f"Frame: c={c:.6g}, l={l:.6g}, h={h:.6g}, k={k:.6g}, r={rr:.6g}")
    if abs(c * h * l * rr) <= STEP_TOL:
        raise NotEntangled("chlr = 0; bereik bevat een productvector")

    if abs(h - rr * np.conj(k)) > STEP_TOL * (1 + abs(h)):
        raise NotPPT("Relatie h = r k̄ faalt")
    if abs(abs(c) - 1) > STEP_TOL:
        raise NotPPT("Relatie |c| = 1 faalt")
    if abs(l - c * np.conj(rr) * k / np.conj(k)) > STEP_TOL * (1 + abs(l)):
        raise NotPPT("Relatie l = c r̄ k/k̄ faalt")

    # diagonale fasen en schalingen naar de normaalvorm
    u, v = 1 / abs(rr), abs(k)
    theta = np.ones(4, dtype=complex)
    theta[1] = np.sqrt(complex(c))
    theta[3] = theta[1] * np.conj(k) / abs(k)
    theta[2] = u * theta[0] * theta[3] ** 2 * rr / theta[1] ** 2
    beta = np.array([1 / theta[0], u / theta[1], theta[1] / (theta[0] * theta[3])])
    gamma = np.array([1, theta[0] / theta[1], theta[0] * theta[3] / (theta[1] * theta[2])])
    blocks = [gamma[i] * (theta[:, None] * blocks[i] * beta[None, :]) for i in range(3)]

    expected = checkerboard_canonical_blocks(CheckerboardParams(u, v))
    residual = max(float(np.max(np.abs(b - e))) for b, e in zip(blocks, expected))
    if residual > 1e-6 * max(1.0, u, v):
        raise ReconstructionFailed(f"Eindblokken wijken {residual:.2e} af van de normaalvorm")

    params = representative(u, v)
    logger.info(f"Checkerboard gereduceerd naar {params}")
    if verify:
        verdict = equivalent_sextuples(
            kernel_sextuple(checkerboard_canonical(params, tol), tol),
            kernel_sextuple(rho, tol),
            tol,
        )
        if not verdict.equivalent:
            raise ReconstructionFailed(f"Normaalvorm {params} niet equivalent (residu {verdict.residual:.2e})")
    return params
