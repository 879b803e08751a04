"""Indexing conventions and page-shift relabelings."""

from .conventions import (
    ADAMS,
    COHOMOLOGY,
    DECREASING,
    E2,
    HOMOLOGY,
    INCREASING,
    INTERNAL,
    SERRE,
    Convention,
    all_conventions,
    apply,
    compose,
    determinant,
    from_internal,
    inverse,
    page_shift_transform,
    to_internal,
    weight_and_degree,
)

IDENTITY = ((1, 0), (0, 1))

__all__ = [
    "ADAMS", "COHOMOLOGY", "DECREASING", "E2", "HOMOLOGY", "INCREASING", "INTERNAL", "SERRE",
    "Convention", "all_conventions", "apply", "compose", "determinant", "from_internal",
    "inverse", "page_shift_transform", "to_internal", "weight_and_degree", "IDENTITY",
]
