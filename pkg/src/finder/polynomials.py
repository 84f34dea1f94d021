"""
Bivariate polynomen voor de productvectorzoeker.

Een polynoom in (x, y) is een 2D coëfficiëntenarray c met c[i, j] de
coëfficiënt van x^i y^j, dezelfde conventie als
numpy.polynomial.polynomial.polyval2d.
"""
from itertools import permutations
from typing import Optional, Sequence
import logging

import numpy as np
from numpy.polynomial import polynomial as P
from scipy import linalg
from scipy.signal import convolve2d

logger = logging.getLogger(__name__)


# Relatieve drempel waaronder een coëfficiënt als nul telt
COEFF_CUTOFF = 1e-13

# Resultant met |det| onder deze fractie van de Hadamard-grens is identiek nul
DEGENERATE_RESULTANT = 1e-11


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    perm = list(perm)
    for i in range(len(perm)):
        while perm[i] != i:
            j = perm[i]
            perm[i], perm[j] = perm[j], perm[i]
            sign = -sign
    return sign


def linear_entries(rows: np.ndarray, base, dir_x, dir_y) -> np.ndarray:
    """
    Regels van M(a) met a = base + x·dir_x + y·dir_y.

    Args:
        rows: array (k, 3, 3) met de matrices W_j; rij j van M(a) is aᵀ W_j
        base, dir_x, dir_y: vectoren in C³

    Returns:
        Array (k, 3, 2, 2): entry (j, col) als lineair polynoom in (x, y)
    """
    k = rows.shape[0]
    entries = np.zeros((k, 3, 2, 2), dtype=complex)
    entries[:, :, 0, 0] = np.einsum("i,jic->jc", np.asarray(base, dtype=complex), rows)
    entries[:, :, 1, 0] = np.einsum("i,jic->jc", np.asarray(dir_x, dtype=complex), rows)
    entries[:, :, 0, 1] = np.einsum("i,jic->jc", np.asarray(dir_y, dtype=complex), rows)
    return entries


def det3(block: np.ndarray) -> np.ndarray:
    """Determinant van een 3×3 matrix van 2×2 coëfficiëntenarrays (resultaat 4×4)."""
    result = np.zeros((4, 4), dtype=complex)
    for perm in permutations(range(3)):
        term = block[0, perm[0]]
        term = convolve2d(term, block[1, perm[1]])
        term = convolve2d(term, block[2, perm[2]])
        result += _perm_sign(perm) * term
    return result


def minor_polynomials(entries: np.ndarray) -> list[np.ndarray]:
    """Alle 3×3 minoren van een (k, 3)-matrix van lineaire polynomen."""
    k = entries.shape[0]
    minors = []
    for i in range(k):
        for j in range(i + 1, k):
            for l in range(j + 1, k):
                minors.append(det3(entries[[i, j, l]]))
    return minors


def coefficient_norm(c: np.ndarray) -> float:
    return float(np.linalg.norm(c))


def normalize(c: np.ndarray) -> np.ndarray:
    norm = coefficient_norm(c)
    return c / norm if norm > 0 else c


def monomial_norm(x: complex, y: complex, degree: int = 3) -> float:
    """‖(x^i y^j)_{i+j≤degree}‖, de schaal van |p(x,y)| voor een genormaliseerde p."""
    ax, ay = abs(x), abs(y)
    total = sum(ax ** (2 * i) * ay ** (2 * j) for i in range(degree + 1) for j in range(degree + 1 - i))
    return float(np.sqrt(total))


def normalized_residual(polys: Sequence[np.ndarray], x: complex, y: complex) -> float:
    """max_j |p_j(x,y)| / monomial_norm; polynomen moeten genormaliseerd zijn."""
    values = [abs(P.polyval2d(x, y, c)) for c in polys]
    return float(max(values) / monomial_norm(x, y))


def y_degree(c: np.ndarray) -> int:
    """Hoogste macht van y met een niet-verwaarloosbare coëfficiëntkolom."""
    scale = max(coefficient_norm(c), 1e-300)
    cols = np.flatnonzero(np.linalg.norm(c, axis=0) > COEFF_CUTOFF * scale)
    return int(cols[-1]) if cols.size else -1


def total_degree(c: np.ndarray) -> int:
    scale = max(coefficient_norm(c), 1e-300)
    idx = np.argwhere(np.abs(c) > COEFF_CUTOFF * scale)
    return int(idx.sum(axis=1).max()) if idx.size else -1


def univariate_roots(coeffs_ascending: np.ndarray) -> np.ndarray:
    """Wortels van Σ c_j t^j, met verwaarloosbare hoogste coëfficiënten weggelaten."""
    c = np.asarray(coeffs_ascending, dtype=complex)
    scale = np.max(np.abs(c)) if c.size else 0.0
    if scale == 0:
        return np.array([], dtype=complex)
    nz = np.flatnonzero(np.abs(c) > COEFF_CUTOFF * scale)
    c = c[: nz[-1] + 1]
    if c.size <= 1:
        return np.array([], dtype=complex)
    return np.roots(c[::-1])


def y_polynomial(c: np.ndarray, x: complex) -> np.ndarray:
    """Coëfficiënten (oplopend in y) van p(x, ·)."""
    return P.polyval(x, c)


def sylvester_matrix(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """
    Sylvester-matrix van twee univariate polynomen (oplopende coëfficiënten).

    Beide moeten graad ≥ 1 hebben.
    """
    pd = np.asarray(p, dtype=complex)[::-1]
    qd = np.asarray(q, dtype=complex)[::-1]
    m, n = pd.size - 1, qd.size - 1
    block_p = linalg.toeplitz(np.r_[pd[0], np.zeros(n - 1)], np.r_[pd, np.zeros(n - 1)])
    block_q = linalg.toeplitz(np.r_[qd[0], np.zeros(m - 1)], np.r_[qd, np.zeros(m - 1)])
    return np.vstack((block_p, block_q))


def resultant_in_x(p: np.ndarray, q: np.ndarray, n_samples: int = 32) -> Optional[np.ndarray]:
    """
    Resultant Res_y(p, q) als polynoom in x (oplopende coëfficiënten).

    De determinant van de Sylvester-matrix wordt bemonsterd op eenheidswortels
    en met kleinste kwadraten gefit. Geeft None als de resultant identiek nul is
    (gemeenschappelijke factor).
    """
    dp, dq = y_degree(p), y_degree(q)
    if dp < 0 or dq < 0:
        return None
    if dp == 0:
        return p[:, 0].copy()
    if dq == 0:
        return q[:, 0].copy()

    p = p[:, : dp + 1]
    q = q[:, : dq + 1]
    bound = max(total_degree(p), 1) * max(total_degree(q), 1)
    n = max(n_samples, bound + 1)
    xs = np.exp(2j * np.pi * np.arange(n) / n)

    values = np.empty(n, dtype=complex)
    hadamard = 0.0
    for idx, x in enumerate(xs):
        s = sylvester_matrix(y_polynomial(p, x), y_polynomial(q, x))
        values[idx] = linalg.det(s)
        hadamard = max(hadamard, float(np.prod(np.linalg.norm(s, axis=1))))

    if hadamard == 0 or np.max(np.abs(values)) < DEGENERATE_RESULTANT * hadamard:
        return None

    vandermonde = xs[:, None] ** np.arange(bound + 1)[None, :]
    coeffs = linalg.lstsq(vandermonde, values)[0]
    return coeffs


def newton_polish(
    polys: Sequence[np.ndarray],
    x: complex,
    y: complex,
    max_iter: int = 50,
    univariate: bool = False,
) -> tuple[complex, complex, bool]:
    """
    Gauss-Newton op het overbepaalde stelsel p_j(x, y) = 0.

    Returns:
        (x, y, geconvergeerd)
    """
    dx = [P.polyder(c, axis=0) for c in polys]
    dy = [P.polyder(c, axis=1) for c in polys]
    for _ in range(max_iter):
        f = np.array([P.polyval2d(x, y, c) for c in polys])
        if univariate:
            jac = np.array([[P.polyval2d(x, y, c)] for c in dx])
        else:
            jac = np.array([[P.polyval2d(x, y, cx), P.polyval2d(x, y, cy)] for cx, cy in zip(dx, dy)])
        step = linalg.lstsq(jac, -f)[0]
        x += step[0]
        if not univariate:
            y += step[1]
        size = float(np.max(np.abs(step)))
        if size <= 1e-15 * (1 + abs(x) + abs(y)):
            return x, y, True
        if not np.isfinite(size):
            return x, y, False
    residual = normalized_residual(polys, x, y)
    return x, y, residual < 1e-13
