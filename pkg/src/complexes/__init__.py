"""Bounded chain complexes of free modules."""

from .chain_complex import ChainComplex, homology
from .operations import (
    HomBlock,
    euler_characteristic,
    from_cochain,
    hom_complex,
    hom_filtration_level,
    hom_layout,
    homology_euler_characteristic,
    shift,
    subcomplex,
    truncate_geq,
    truncation_spans,
)

__all__ = [
    "ChainComplex", "homology", "HomBlock", "euler_characteristic", "from_cochain",
    "hom_complex", "hom_filtration_level", "hom_layout", "homology_euler_characteristic",
    "shift", "subcomplex", "truncate_geq", "truncation_spans",
]
