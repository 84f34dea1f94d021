"""
Equivalence module: SLOCC-equivalentie, canonieke vorm en checkerboards.
"""
from .checkerboard import (
    CHECKERBOARD_SYMBOL,
    CheckerboardVerdict,
    checkerboard_class,
    checkerboard_reduce,
    params_from_lambda_mu,
    representative,
)
from .slocc import (
    CanonicalForm,
    EquivalenceVerdict,
    canonical_form,
    canonicalize,
    cubic_coefficients,
    cubic_roots_check,
    equivalent_sextuples,
    find_ordering,
    is_equivalent,
    kernel_sextuple,
    pppnnp_quadruples,
    quadruple_for_params,
    quadruple_orbit_membership,
    require_rank4_ppt,
)

__all__ = [
    "CHECKERBOARD_SYMBOL",
    "CheckerboardVerdict",
    "checkerboard_class",
    "checkerboard_reduce",
    "params_from_lambda_mu",
    "representative",
    "CanonicalForm",
    "EquivalenceVerdict",
    "canonical_form",
    "canonicalize",
    "cubic_coefficients",
    "cubic_roots_check",
    "equivalent_sextuples",
    "find_ordering",
    "is_equivalent",
    "kernel_sextuple",
    "pppnnp_quadruples",
    "quadruple_for_params",
    "quadruple_orbit_membership",
    "require_rank4_ppt",
]
