"""
Core module: matrices, partiële transponering, rang en productvectoren.
"""
from .errors import PPTESError
from .qmat import (
    BipartiteState,
    ComplexMatrix,
    allclose,
    apply_ilo,
    as_complex_matrix,
    birank,
    extreme_necessary,
    is_ppt,
    is_psd,
    kernel_basis,
    normalize,
    numerical_rank,
    partial_transpose,
    random_ilo,
    range_basis,
    reduced_states,
)
from .product import ProductVector, canonical_projective, projective_distance, same_vector_sets

__all__ = [
    "PPTESError",
    "BipartiteState",
    "ComplexMatrix",
    "allclose",
    "apply_ilo",
    "as_complex_matrix",
    "birank",
    "extreme_necessary",
    "is_ppt",
    "is_psd",
    "kernel_basis",
    "normalize",
    "numerical_rank",
    "partial_transpose",
    "random_ilo",
    "range_basis",
    "reduced_states",
    "ProductVector",
    "canonical_projective",
    "projective_distance",
    "same_vector_sets",
]
