"""Exact linear algebra over the integers, the rationals and prime fields."""

from .rings import Ring, INTEGERS, RATIONALS, PRIME_FIELD
from .matrix import ExactMatrix, kron, block_diagonal, column_vector
from .normal_forms import (
    smith_normal_form,
    decompose,
    kernel_basis,
    image_basis,
    saturate,
    is_saturated,
    solve,
    contains,
    span_equal,
    span_sum,
    intersect,
    preimage,
    restricted_preimage,
    inverse,
    rank,
    invariant_factors,
)
from .modules import FgModule, Subquotient, subquotient

__all__ = [
    "Ring", "INTEGERS", "RATIONALS", "PRIME_FIELD",
    "ExactMatrix", "kron", "block_diagonal", "column_vector",
    "smith_normal_form", "decompose", "kernel_basis", "image_basis", "saturate",
    "is_saturated", "solve", "contains", "span_equal", "span_sum", "intersect",
    "preimage", "restricted_preimage", "inverse", "rank", "invariant_factors",
    "FgModule", "Subquotient", "subquotient",
]
