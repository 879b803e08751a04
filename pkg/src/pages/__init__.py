"""Pages of the spectral sequence of a filtered complex."""

from .page import Page, PageTerm, Position
from .classical import CycleCalculus, e1_page, er_classical, page_turning_report
from .lurie import er_lurie
from .infinity import ConvergenceReport, convergence_report, einfty_page
from .boundedness import BoundednessClass, boundedness_class
from .comparison import ComparisonReport, Mismatch, compare_pages
from .naturality import InducedPageMap, induced_page_map
from ..filtered import stabilization_index

METHODS = ("classical", "lurie")


def er_page(F, r: int, method: str = "classical") -> Page:
    """Dispatch to one of the page constructions.

    Raises:
        ValueError: If the method is unknown
    """
    if method == "classical":
        return er_classical(F, r)
    if method == "lurie":
        return er_lurie(F, r)
    raise ValueError(f"Unknown page method {method!r}, expected one of {METHODS}")


__all__ = [
    "Page", "PageTerm", "Position", "CycleCalculus", "e1_page", "er_classical",
    "page_turning_report", "er_lurie", "ConvergenceReport", "convergence_report", "einfty_page",
    "BoundednessClass", "boundedness_class", "ComparisonReport", "Mismatch", "compare_pages",
    "InducedPageMap", "induced_page_map", "stabilization_index", "METHODS", "er_page",
]
