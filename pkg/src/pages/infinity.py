"""E^∞ and convergence to the homology of the filtered complex."""

import logging
from dataclasses import dataclass, field
from typing import List

from .classical import CycleCalculus, er_classical
from .page import Page
from ..filtered import FilteredComplex, induced_homology_filtration

logger = logging.getLogger(__name__)


def einfty_page(F: FilteredComplex, calculus: CycleCalculus = None) -> Page:
    """The classical page at the stabilization index, marked as E^∞."""
    r = F.stabilization_index()
    calculus = calculus or CycleCalculus(F)
    page = Page(F, r, "classical", lambda p, n: calculus.spans(r, p, n), infinite=True)
    return page


@dataclass
class ConvergenceReport:
    """Comparison of gr of the induced filtration on H_n with E^∞ terms."""
    applicable: bool = True
    mismatches: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def convergence_report(F: FilteredComplex, reference: Page = None) -> ConvergenceReport:
    """Check gr^s H_n ≅ E^∞_{-s, s+n} for all s and n.

    Args:
        F: Filtered complex
        reference: Page to compare against (defaults to E^∞)

    Returns:
        A report; for non-complete filtrations it is empty and flagged not
        applicable, since E^∞ then sees only C/F^∞ and need not match gr H_*
    """
    if not F.is_complete:
        logger.debug("Filtration has a constant tail; convergence is not applicable")
        return ConvergenceReport(applicable=False)
    page = reference or einfty_page(F)
    report = ConvergenceReport()
    for n in F.degrees():
        induced = induced_homology_filtration(F, n)
        free_total = 0
        for s in F.weights():
            graded = induced.graded(s)
            term = page.term(-s, s + n).iso
            free_total += graded.free_rank
            if graded != term:
                report.mismatches.append(
                    f"H_{n}: gr^{s} = {graded.summary()} but {page.label}_{(-s, s + n)} = {term.summary()}"
                )
        if free_total != induced.total.free_rank:
            report.mismatches.append(
                f"H_{n} = {induced.total.summary()} has free rank {induced.total.free_rank}, "
                f"gradeds sum to {free_total}"
            )
    if report.mismatches:
        logger.warning(f"Convergence check found {len(report.mismatches)} mismatches")
    return report
