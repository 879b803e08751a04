"""
The secondary filtration G on a single stage Dec(F)^s, and the check that
its graded pieces are good truncations of the gradeds of F:

    G^w Dec(F)^s M_n = {x ∈ F^{max(w, s-n)} M_n : dx ∈ F^{max(w, s-n+1)} M_{n-1}}
    gr^w_G Dec(F)^s ≃ τ_{≥ s-w} gr^w_F
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from .deligne import decalage_level
from ..complexes import ChainComplex, subcomplex
from ..filtered import FilteredComplex, graded_homology, interval_cycles
from ..linalg import ExactMatrix, solve

logger = logging.getLogger(__name__)


def decalage_stage(F: FilteredComplex, s: int) -> Tuple[ChainComplex, Dict[int, ExactMatrix]]:
    """Dec(F)^s as a complex on free bases, with its inclusions into M."""
    bases = {n: decalage_level(F, s, n) for n in F.degrees()}
    return subcomplex(F.complex, bases)


def secondary_level(F: FilteredComplex, s: int, w: int, n: int) -> ExactMatrix:
    """G^w Dec(F)^s M_n as a span in M_n."""
    return interval_cycles(F, max(w, s - n), max(w, s - n + 1), n)


def secondary_filtration(F: FilteredComplex, s: int) -> FilteredComplex:
    """G^⋆ on Dec(F)^s, expressed in the basis of the subcomplex."""
    stage, inclusions = decalage_stage(F, s)
    degrees = F.degrees()
    candidates = set(F.breakpoints)
    for n in degrees:
        candidates.update((s - n, s - n + 1))
    points = sorted(candidates)
    steps = {}
    for w in points:
        for n in degrees:
            basis = inclusions[n]
            if basis.cols == 0:
                continue
            coords = solve(basis, secondary_level(F, s, w, n))
            if coords is None:
                raise ValueError(f"G^{w} Dec^{s} M_{n} is not inside Dec^{s} M_{n}")
            steps[(w, n)] = coords
    return FilteredComplex(stage, points, steps, F.tail_high, F.allow_unsaturated).compacted()


@dataclass
class TruncationCheck:
    s: int
    w: int
    mismatches: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def truncation_graded_check(F: FilteredComplex, s: int, w: int,
                            G: FilteredComplex = None) -> TruncationCheck:
    """Compare H_n(gr^w_G Dec(F)^s) with H_n(τ_{≥ s-w} gr^w_F) degree by degree."""
    G = G or secondary_filtration(F, s)
    check = TruncationCheck(s, w)
    cutoff = s - w
    for n in F.degrees():
        left = graded_homology(G, w, n)
        if n >= cutoff:
            right = graded_homology(F, w, n)
            if left != right:
                check.mismatches.append(
                    f"(s={s}, w={w}) H_{n}: gr_G = {left.summary()}, gr_F = {right.summary()}"
                )
        elif not left.is_zero:
            check.mismatches.append(
                f"(s={s}, w={w}) H_{n}: gr_G = {left.summary()} should vanish below degree {cutoff}"
            )
    return check


def truncation_window(F: FilteredComplex) -> List[Tuple[int, int]]:
    """All (s, w) pairs where either side of the truncation identity can be nonzero."""
    dec_points = [b + n + e for b in F.breakpoints for n in F.degrees() for e in (0, -1)]
    if not dec_points:
        return []
    s_range = range(min(dec_points) - 1, max(dec_points) + 1)
    return [(s, w) for s in s_range for w in F.weights()]
