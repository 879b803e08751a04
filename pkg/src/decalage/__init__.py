"""Deligne's décalage and its comparison with the page-shifted spectral sequence."""

from .deligne import cohomological_decalage_level, decalage_iterate, decalage_level, deligne_decalage
from .secondary import (
    TruncationCheck,
    decalage_stage,
    secondary_filtration,
    secondary_level,
    truncation_graded_check,
    truncation_window,
)
from .comparison_map import (
    ComparisonMapReport,
    PositionCertificate,
    comparison_map_e1_to_e2,
    comparison_naturality,
    iterated_comparison,
)

__all__ = [
    "cohomological_decalage_level", "decalage_iterate", "decalage_level", "deligne_decalage",
    "TruncationCheck", "decalage_stage", "secondary_filtration", "secondary_level",
    "truncation_graded_check", "truncation_window", "ComparisonMapReport", "PositionCertificate",
    "comparison_map_e1_to_e2", "comparison_naturality", "iterated_comparison",
]
