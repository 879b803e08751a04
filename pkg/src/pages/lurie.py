"""
Pages as images of maps between homologies of interval gradeds.

E^r_{s,t} is the image of H_n(gr^{[p, p+r)}) → H_n(gr^{[p-r+1, p+1)}) with
p = -s and n = s + t, the map being induced by F^p ⊆ F^{p-r+1}. A class
[x] with x ∈ F^p, dx ∈ F^{p+r} is sent to its class in the larger interval;
the differential is the connecting map, realized as x ↦ [dx].
"""

import logging

from .page import Page
from ..filtered import FilteredComplex, interval_boundaries, interval_cycles

logger = logging.getLogger(__name__)


def er_lurie(F: FilteredComplex, r: int) -> Page:
    if r < 1:
        raise ValueError(f"Page index must be >= 1, got {r}")

    def spans(p: int, n: int):
        # cycles of the source interval, boundaries of the target interval
        return interval_cycles(F, p, p + r, n), interval_boundaries(F, p - r + 1, p + 1, n)

    return Page(F, r, "lurie", spans)
