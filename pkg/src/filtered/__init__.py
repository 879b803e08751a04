"""Strictly filtered chain complexes."""

from .filtration import (
    CONSTANT_TAIL,
    TAILS,
    ZERO_TAIL,
    FilteredComplex,
    Violation,
    filtration_level,
    stabilization_index,
    validate,
)
from .gradeds import (
    graded_homology,
    graded_module,
    graded_piece,
    interval_boundaries,
    interval_cycles,
    interval_graded,
    interval_homology,
)
from .generators import (
    constant_filtration,
    filtration_from_weights,
    from_increasing,
    inserted_filtration,
    padic_filtration,
    shift_filtration,
    stupid_filtration,
    whitehead_filtration,
)
from .homology_filtration import FilteredFgModule, induced_homology_filtration
from .maps import FilteredMap, identity_map, validate_map

__all__ = [
    "CONSTANT_TAIL", "TAILS", "ZERO_TAIL", "FilteredComplex", "Violation", "filtration_level",
    "stabilization_index", "validate", "graded_homology", "graded_module", "graded_piece",
    "interval_boundaries", "interval_cycles", "interval_graded", "interval_homology",
    "constant_filtration", "filtration_from_weights", "from_increasing", "inserted_filtration",
    "padic_filtration", "shift_filtration", "stupid_filtration", "whitehead_filtration",
    "FilteredFgModule", "induced_homology_filtration", "FilteredMap", "identity_map", "validate_map",
]
