"""
Pages from cycles and boundaries.

    Z^r_{p,n} = {x ∈ F^p M_n : dx ∈ F^{p+r} M_{n-1}},   Z^0_{p,n} = F^p M_n
    E^r_{p,n} = Z^r_{p,n} / (d Z^{r-1}_{p-r+1,n+1} + Z^{r-1}_{p+1,n})

with internal labels s = -p, t = n + p.
"""

import logging
from typing import Dict, List, Tuple

from .page import Page
from ..filtered import FilteredComplex, interval_homology
from ..linalg import ExactMatrix, intersect, restricted_preimage, span_equal, span_sum

logger = logging.getLogger(__name__)


class CycleCalculus:
    """Memoized Z^r and denominators for one filtered complex."""

    def __init__(self, F: FilteredComplex):
        self.F = F
        self._cycles: Dict[Tuple[int, int, int], ExactMatrix] = {}

    def cycles(self, r: int, p: int, n: int) -> ExactMatrix:
        key = (r, p, n)
        span = self._cycles.get(key)
        if span is None:
            if r == 0:
                span = self.F.level(p, n)
            else:
                span = restricted_preimage(self.F.level(p, n), self.F.differential(n), self.F.level(p + r, n - 1))
            self._cycles[key] = span
        return span

    def boundary_part(self, r: int, p: int, n: int) -> ExactMatrix:
        """d Z^{r-1}_{p-r+1, n+1}."""
        return self.F.differential(n + 1) @ self.cycles(r - 1, p - r + 1, n + 1)

    def denominator(self, r: int, p: int, n: int) -> ExactMatrix:
        return span_sum(self.boundary_part(r, p, n), self.cycles(r - 1, p + 1, n))

    def spans(self, r: int, p: int, n: int) -> Tuple[ExactMatrix, ExactMatrix]:
        return self.cycles(r, p, n), self.denominator(r, p, n)


def e1_page(F: FilteredComplex) -> Page:
    """E^1_{s,t} = H_{s+t}(gr^{-s}) with d^1 induced by d."""
    def spans(p: int, n: int):
        homology = interval_homology(F, p, p + 1, n)
        return homology.numerator, homology.denominator
    return Page(F, 1, "e1", spans)


def er_classical(F: FilteredComplex, r: int, calculus: CycleCalculus = None) -> Page:
    if r < 1:
        raise ValueError(f"Page index must be >= 1, got {r}")
    calculus = calculus or CycleCalculus(F)
    return Page(F, r, "classical", lambda p, n: calculus.spans(r, p, n))


def page_turning_report(F: FilteredComplex, r: int, calculus: CycleCalculus = None) -> List[str]:
    """Span-level check that H(E^r, d^r) is E^{r+1}.

    With N_H = ker-lift + B^r_p and D_H = d Z^r_{p-r,n+1} + B^r_p at each
    position, verifies N_H = Z^{r+1}_p + D_H and Z^{r+1}_p ∩ D_H = B^{r+1}_p,
    plus the d^r∘d^r = 0 law.
    """
    calculus = calculus or CycleCalculus(F)
    page = er_classical(F, r, calculus)
    violations = [f"{page.label}: d∘d ≠ 0 at {pos}" for pos in page.dd_violations()]
    for s, t in page.positions():
        p, n = -s, s + t
        numerator, denominator = page.homology_spans(s, t)
        next_cycles = calculus.cycles(r + 1, p, n)
        if not span_equal(numerator, span_sum(next_cycles, denominator)):
            violations.append(f"{page.label}: kernel at {(s, t)} differs from Z^{r + 1} + im")
        if not span_equal(intersect(next_cycles, denominator), calculus.denominator(r + 1, p, n)):
            violations.append(f"{page.label}: Z^{r + 1} ∩ im at {(s, t)} differs from the next denominator")
    if violations:
        logger.warning(f"Page turning failed on {len(violations)} checks at r={r}")
    return violations
