"""Filtered differential graded algebras and products on pages."""

from .dga import FilteredDGA, validate_dga
from .products import (
    LeibnizReport,
    all_samples,
    chain_product,
    check_leibniz,
    decalage_multiplicativity,
    leibniz_sides,
    page_product,
    product_well_defined,
)
from .examples import exterior_dga, koszul_dga, monomial_dga

__all__ = [
    "FilteredDGA", "validate_dga", "LeibnizReport", "all_samples", "chain_product",
    "check_leibniz", "decalage_multiplicativity", "leibniz_sides", "page_product",
    "product_well_defined", "exterior_dga", "koszul_dga", "monomial_dga",
]
