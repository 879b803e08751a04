"""
The filtration induced on homology: F^s H_n = im(H_n(F^s) → H_n(M)).
"""

import logging
from dataclasses import dataclass, field
from typing import Dict

from .filtration import FilteredComplex
from ..linalg import ExactMatrix, FgModule, Subquotient, intersect, span_sum

logger = logging.getLogger(__name__)


@dataclass
class FilteredFgModule:
    """H_n(M) with its induced filtration.

    Args:
        total: H_n(M)
        weight_steps: Map weight s → F^s H_n for the weights where it may change
        degree: Homological degree n
    """
    total: FgModule
    weight_steps: Dict[int, FgModule]
    degree: int
    _spans: Dict[int, ExactMatrix] = field(default_factory=dict, repr=False)
    _boundaries: ExactMatrix = field(default=None, repr=False)
    _ambient_rank: int = field(default=0, repr=False)
    _first: int = field(default=0, repr=False)
    _last: int = field(default=0, repr=False)

    def step_span(self, s: int) -> ExactMatrix:
        """Cycles of F^s M_n plus boundaries, following the tail rules."""
        s = max(self._first, min(s, self._last))
        return self._spans[s]

    def step(self, s: int) -> FgModule:
        s = max(self._first, min(s, self._last))
        return self.weight_steps[s]

    def graded(self, s: int) -> FgModule:
        """gr^s H_n = F^s H_n / F^{s+1} H_n."""
        return Subquotient(
            self.total.ring, self._ambient_rank, self.step_span(s), self.step_span(s + 1)
        ).module


def induced_homology_filtration(F: FilteredComplex, n: int) -> FilteredFgModule:
    C = F.complex
    cycles = C.cycles(n)
    boundaries = C.boundaries(n)
    rank = C.rank(n)
    total = C.homology(n)
    first, last = F.breakpoints[0] - 1, F.breakpoints[-1]
    spans, steps = {}, {}
    for s in range(first, last + 1):
        span = span_sum(intersect(F.level(s, n), cycles), boundaries)
        spans[s] = span
        steps[s] = Subquotient(F.ring, rank, span, boundaries).module
    logger.debug(f"Induced filtration on H_{n}: {[str(m) for m in steps.values()]}")
    return FilteredFgModule(total, steps, n, spans, boundaries, rank, first, last)
