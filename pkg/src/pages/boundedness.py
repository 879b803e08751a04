"""Boundedness classification of a spectral sequence from its E^1 support."""

import logging
import math
from dataclasses import asdict, dataclass
from typing import Optional, Tuple

from .classical import e1_page
from ..filtered import FilteredComplex

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BoundednessClass:
    upper_half_plane: bool
    lower_half_plane: bool
    left_half_plane: bool
    right_half_plane: bool
    first_quadrant: bool
    second_quadrant: bool
    third_quadrant: bool
    fourth_quadrant: bool
    column_bounded: bool
    row_bounded: bool
    complete: bool
    exhaustive: bool
    s_range: Optional[Tuple[int, int]]
    t_range: Optional[Tuple[int, int]]

    def to_dict(self) -> dict:
        return asdict(self)


def boundedness_class(F: FilteredComplex) -> BoundednessClass:
    """Classify the E^1 support.

    Upper half-plane means E^1_{s,t} = 0 below some row, lower above some row,
    right half-plane left of some column and left half-plane right of some
    column. Column-bounded is left and right, row-bounded is upper and lower.
    An empty support satisfies every bound.
    """
    support = e1_page(F).support()
    s_values = [s for s, _ in support]
    t_values = [t for _, t in support]
    s_low, s_high = min(s_values, default=math.inf), max(s_values, default=-math.inf)
    t_low, t_high = min(t_values, default=math.inf), max(t_values, default=-math.inf)
    s_range = (s_low, s_high) if support else None
    t_range = (t_low, t_high) if support else None

    upper = t_low > -math.inf
    lower = t_high < math.inf
    left = s_high < math.inf
    right = s_low > -math.inf

    def inside(s_sign: int, t_sign: int) -> bool:
        return all(s * s_sign >= 0 and t * t_sign >= 0 for s, t in support)

    return BoundednessClass(
        upper_half_plane=upper,
        lower_half_plane=lower,
        left_half_plane=left,
        right_half_plane=right,
        first_quadrant=inside(1, 1),
        second_quadrant=inside(-1, 1),
        third_quadrant=inside(-1, -1),
        fourth_quadrant=inside(1, -1),
        column_bounded=left and right,
        row_bounded=upper and lower,
        complete=F.is_complete,
        exhaustive=True,
        s_range=s_range,
        t_range=t_range,
    )
