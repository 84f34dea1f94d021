"""
States module: ω, checkerboard, Choi en UPB-complementen.
"""
from .builders import (
    CanonicalParams,
    CheckerboardParams,
    CheckerboardRaw,
    CHECKERBOARD_SLOT_NAMES,
    checkerboard_canonical,
    checkerboard_canonical_blocks,
    checkerboard_kernel_vectors,
    checkerboard_lambda_mu,
    checkerboard_raw,
    checkerboard_roots,
    choi_canonical_params,
    choi_kernel_vectors,
    choi_matrix,
    choi_quadruple,
    choi_state,
    omega,
    omega_blocks,
)
from .fixtures import (
    PPPNNP_ORDER,
    UPBQuintuple,
    pyramid_fixture,
    tiles_fixture,
    upb_state,
    validate_upb,
)

__all__ = [
    "CanonicalParams",
    "CheckerboardParams",
    "CheckerboardRaw",
    "CHECKERBOARD_SLOT_NAMES",
    "checkerboard_canonical",
    "checkerboard_canonical_blocks",
    "checkerboard_kernel_vectors",
    "checkerboard_lambda_mu",
    "checkerboard_raw",
    "checkerboard_roots",
    "choi_canonical_params",
    "choi_kernel_vectors",
    "choi_matrix",
    "choi_quadruple",
    "choi_state",
    "omega",
    "omega_blocks",
    "PPPNNP_ORDER",
    "UPBQuintuple",
    "pyramid_fixture",
    "tiles_fixture",
    "upb_state",
    "validate_upb",
]
