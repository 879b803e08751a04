"""
Indexing conventions.

Pages are computed once in the internal labels E^1_{s,t} = H_{s+t}(gr^{-s})
and relabeled for display. Every convention is a unimodular linear map of
Z², stored as its matrix onto the internal labels.

    scheme  variance    to internal
    serre   homology    (s, t) ↦ (s, t)
    serre   cohomology  (s, t) ↦ (-s, -t)
    e2      homology    (s, t) ↦ (-t, s + 2t)
    e2      cohomology  (s, t) ↦ (t, -s - 2t)
    adams   homology    (s, t) ↦ (-t, s + t)
    adams   cohomology  (s, t) ↦ (t, -s - t)

The filtration direction does not change the labels; it changes which
filtration index a label refers to (gr_s = gr^{-s} for increasing
filtrations).
"""

import logging
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

logger = logging.getLogger(__name__)

HOMOLOGY = "homology"
COHOMOLOGY = "cohomology"
DECREASING = "decreasing"
INCREASING = "increasing"
SERRE = "serre"
ADAMS = "adams"
E2 = "e2"

VARIANCES = (HOMOLOGY, COHOMOLOGY)
DIRECTIONS = (DECREASING, INCREASING)
SCHEMES = (SERRE, E2, ADAMS)

Matrix2 = Tuple[Tuple[int, int], Tuple[int, int]]

_TO_INTERNAL = {
    (SERRE, HOMOLOGY): ((1, 0), (0, 1)),
    (SERRE, COHOMOLOGY): ((-1, 0), (0, -1)),
    (E2, HOMOLOGY): ((0, -1), (1, 2)),
    (E2, COHOMOLOGY): ((0, 1), (-1, -2)),
    (ADAMS, HOMOLOGY): ((0, -1), (1, 1)),
    (ADAMS, COHOMOLOGY): ((0, 1), (-1, -1)),
}


def _as_array(matrix: Matrix2) -> np.ndarray:
    return np.array(matrix, dtype=np.int64)


def _as_tuple(array: np.ndarray) -> Matrix2:
    return tuple(tuple(int(x) for x in row) for row in array)


def apply(matrix: Matrix2, s: int, t: int) -> Tuple[int, int]:
    """Apply a 2×2 integer matrix to the column vector (s, t)."""
    result = _as_array(matrix) @ np.array([s, t], dtype=np.int64)
    return int(result[0]), int(result[1])


def determinant(matrix: Matrix2) -> int:
    (a, b), (c, d) = matrix
    return a * d - b * c


def inverse(matrix: Matrix2) -> Matrix2:
    """Inverse of a unimodular 2×2 integer matrix.

    Raises:
        ValueError: If the determinant is not ±1
    """
    det = determinant(matrix)
    if det not in (1, -1):
        raise ValueError(f"Matrix {matrix} is not unimodular (det {det})")
    (a, b), (c, d) = matrix
    return _as_tuple(det * np.array([[d, -b], [-c, a]], dtype=np.int64))


def compose(first: Matrix2, second: Matrix2) -> Matrix2:
    """The matrix of ``first`` followed by ``second``."""
    return _as_tuple(_as_array(second) @ _as_array(first))


@dataclass(frozen=True)
class Convention:
    """One labeling of spectral sequence terms.

    Args:
        variance: ``homology`` or ``cohomology``
        direction: ``decreasing`` or ``increasing``
        scheme: ``serre``, ``e2`` or ``adams``
    """
    variance: str = HOMOLOGY
    direction: str = DECREASING
    scheme: str = SERRE

    def __post_init__(self):
        if self.variance not in VARIANCES:
            raise ValueError(f"Unknown variance {self.variance!r}")
        if self.direction not in DIRECTIONS:
            raise ValueError(f"Unknown filtration direction {self.direction!r}")
        if self.scheme not in SCHEMES:
            raise ValueError(f"Unknown indexing scheme {self.scheme!r}")

    @property
    def name(self) -> str:
        return f"{self.scheme}-{self.variance}-{self.direction}"

    @classmethod
    def parse(cls, name: str) -> "Convention":
        """Parse ``scheme-variance-direction``, e.g. ``adams-homology-decreasing``.

        Raises:
            ValueError: If the name does not denote one of the twelve conventions
        """
        parts = str(name).strip().lower().split("-")
        if len(parts) != 3:
            raise ValueError(f"Convention {name!r} must look like scheme-variance-direction")
        scheme, variance, direction = parts
        return cls(variance, direction, scheme)

    @property
    def to_internal_matrix(self) -> Matrix2:
        return _TO_INTERNAL[(self.scheme, self.variance)]

    @property
    def from_internal_matrix(self) -> Matrix2:
        return inverse(self.to_internal_matrix)

    @property
    def page_offset(self) -> int:
        """Shift between internal page numbers and this convention's page labels."""
        return 1 if self.scheme == E2 else 0

    def page_label(self, r: int) -> int:
        return r + self.page_offset

    def to_internal(self, s: int, t: int) -> Tuple[int, int]:
        return apply(self.to_internal_matrix, s, t)

    def from_internal(self, s: int, t: int) -> Tuple[int, int]:
        return apply(self.from_internal_matrix, s, t)

    def differential_bidegree(self, r: int) -> Tuple[int, int]:
        """Bidegree of the internal d^r, (-r, r-1), in this convention's labels."""
        return self.from_internal(-r, r - 1)

    def abutment_position(self, s: int, n: int) -> Tuple[int, int]:
        """Label of the E^∞ term carrying gr^s of the n-th (co)homology.

        ``s`` is this convention's own filtration index; ``n`` its own degree.
        """
        weight = s if self.direction == DECREASING else -s
        degree = n if self.variance == HOMOLOGY else -n
        return self.from_internal(-weight, weight + degree)

    def __str__(self) -> str:
        return self.name


INTERNAL = Convention()


def all_conventions() -> List[Convention]:
    return [Convention(v, d, s) for s in SCHEMES for v in VARIANCES for d in DIRECTIONS]


def to_internal(s: int, t: int, convention: Convention) -> Tuple[int, int]:
    return convention.to_internal(s, t)


def from_internal(s: int, t: int, convention: Convention) -> Tuple[int, int]:
    return convention.from_internal(s, t)


def page_shift_transform(r: int) -> Tuple[Matrix2, Matrix2]:
    """The relabeling from E^{r+1}(F) to E^1(Dec^{(r)} F) and its inverse.

    Raises:
        ValueError: If r < 1
    """
    if r < 1:
        raise ValueError(f"Page shift needs r >= 1, got {r}")
    forward = ((-r + 1, -r), (r, r + 1))
    backward = ((r + 1, r), (-r, -r + 1))
    return forward, backward


def weight_and_degree(r: int, s: int, t: int) -> Tuple[int, int]:
    """E^r_{s,t} lives in weight (r-1)s + rt and cohomological degree (r-2)s + (r-1)t."""
    if r < 1:
        raise ValueError(f"Page index must be >= 1, got {r}")
    return (r - 1) * s + r * t, (r - 2) * s + (r - 1) * t
