"""Finder module: productvectoren in deelruimten van C³⊗C³."""
from .product_vectors import (
    PVSearchResult,
    SearchStatus,
    SubspaceSpec,
    find_product_vectors,
    in_general_position,
    is_ces,
    is_entangled_rank4,
    kernel_product_vectors,
    kernel_subspace,
    range_product_vectors,
    range_subspace,
)

__all__ = [
    "PVSearchResult",
    "SearchStatus",
    "SubspaceSpec",
    "find_product_vectors",
    "in_general_position",
    "is_ces",
    "is_entangled_rank4",
    "kernel_product_vectors",
    "kernel_subspace",
    "range_product_vectors",
    "range_subspace",
]
