"""
Deligne's décalage.

    Dec(F)^s M_n = {x ∈ F^{s-n} M_n : dx ∈ F^{s-n+1} M_{n-1}}

The filtration can only change at s = b + n or s = b + n - 1 for a
breakpoint b of F, so those are the candidate breakpoints; redundant ones
are dropped afterwards.
"""

import logging

from ..filtered import FilteredComplex, interval_cycles
from ..linalg import ExactMatrix

logger = logging.getLogger(__name__)


def decalage_level(F: FilteredComplex, s: int, n: int) -> ExactMatrix:
    return interval_cycles(F, s - n, s - n + 1, n)


def cohomological_decalage_level(F: FilteredComplex, s: int, k: int) -> ExactMatrix:
    """Dec(F)^s M^k = {x ∈ F^{s+k} M^k : dx ∈ F^{s+k+1} M^{k+1}} with M^k = M_{-k}."""
    return interval_cycles(F, s + k, s + k + 1, -k)


def deligne_decalage(F: FilteredComplex) -> FilteredComplex:
    degrees = F.degrees()
    if not degrees:
        return FilteredComplex(F.complex, [F.first_breakpoint], {}, F.tail_high, F.allow_unsaturated)
    candidates = sorted({b + n + shift for b in F.breakpoints for n in degrees for shift in (0, -1)})
    steps = {(s, n): decalage_level(F, s, n) for s in candidates for n in degrees}
    result = FilteredComplex(F.complex, candidates, steps, F.tail_high, F.allow_unsaturated).compacted()
    logger.debug(f"Dec: breakpoints {list(F.breakpoints)} -> {list(result.breakpoints)}")
    return result


def decalage_iterate(F: FilteredComplex, k: int) -> FilteredComplex:
    if k < 0:
        raise ValueError(f"Iteration count must be >= 0, got {k}")
    for _ in range(k):
        F = deligne_decalage(F)
    return F
