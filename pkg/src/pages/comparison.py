"""Term-by-term comparison of two pages under a relabeling."""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .page import Page, Position
from ..indexing import IDENTITY, apply, inverse

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Mismatch:
    """A disagreement between P at ``left`` and Q at ``right``."""
    kind: str
    left: Position
    right: Position
    left_value: str
    right_value: str

    def __str__(self) -> str:
        return (f"{self.kind} mismatch: {self.left_value} at {self.left} "
                f"vs {self.right_value} at {self.right}")


@dataclass
class ComparisonReport:
    left_label: str
    right_label: str
    transform: Tuple[Tuple[int, int], Tuple[int, int]]
    mismatches: List[Mismatch] = field(default_factory=list)
    positions_checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def describe(self) -> List[str]:
        return [f"{self.left_label} vs {self.right_label}: {m}" for m in self.mismatches]


def compare_pages(P: Page, Q: Page, T=IDENTITY, differentials: bool = True) -> ComparisonReport:
    """Check P[T(b)] ≅ Q[b] for every position b, with kernels and images of d.

    Args:
        P: Page whose labels are the images under T
        Q: Page indexed by the source labels
        T: Unimodular 2×2 integer matrix
        differentials: Also compare kernel and image of the differentials

    Raises:
        ValueError: If T is not unimodular
    """
    T_inv = inverse(T)
    positions = set(Q.positions()) | {apply(T_inv, *a) for a in P.positions()}
    report = ComparisonReport(P.label, Q.label, T)
    for b in sorted(positions):
        a = apply(T, *b)
        checks = [("term", P.term(*a).iso, Q.term(*b).iso)]
        if differentials:
            checks.append(("kernel", P.kernel(*a), Q.kernel(*b)))
            checks.append(("image", P.image(*a), Q.image(*b)))
        for kind, left, right in checks:
            if left != right:
                report.mismatches.append(Mismatch(kind, a, b, left.summary(), right.summary()))
        report.positions_checked += 1
    if report.mismatches:
        logger.info(f"{P.label} vs {Q.label}: {len(report.mismatches)} mismatches")
    return report
