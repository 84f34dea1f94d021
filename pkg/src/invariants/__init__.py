"""
Invariants module: J-invarianten, symbolen, de stabilisator en Φ.
"""
from .action import act_alpha, act_beta, act_word, alpha_fixed_point, orbit, orbit_contains, orbit_size_histogram
from .group import ALPHA_ORDER, BETA_ORDER, IDENTITY, apply_ordering, compose, stabilizer, word_ordering
from .jinvariants import (
    PPPNNP,
    InvariantTuple,
    Quadruple,
    all_orderings,
    census_summary,
    classify_symbol,
    classify_value,
    complex_invariants,
    delta,
    frame_sextuple,
    in_box,
    is_checkerboard_quadruple,
    ordering_symbols,
    permuted_quadruple,
    quintuple_invariants,
    relative_distance,
    sextuple_invariants,
    symbol_census,
)
from .phi import phi

__all__ = [
    "act_alpha",
    "act_beta",
    "act_word",
    "alpha_fixed_point",
    "orbit",
    "orbit_contains",
    "orbit_size_histogram",
    "ALPHA_ORDER",
    "BETA_ORDER",
    "IDENTITY",
    "apply_ordering",
    "compose",
    "stabilizer",
    "word_ordering",
    "PPPNNP",
    "InvariantTuple",
    "Quadruple",
    "all_orderings",
    "census_summary",
    "classify_symbol",
    "classify_value",
    "complex_invariants",
    "delta",
    "frame_sextuple",
    "in_box",
    "is_checkerboard_quadruple",
    "ordering_symbols",
    "permuted_quadruple",
    "quintuple_invariants",
    "relative_distance",
    "sextuple_invariants",
    "symbol_census",
    "phi",
]
