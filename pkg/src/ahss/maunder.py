"""
Agreement of the Atiyah–Hirzebruch spectral sequence built from the skeletal
filtration with the one built from the Whitehead tower of the coefficients.

The décalage of the skeletal filtration is the Whitehead filtration, so its
pages agree with the Whitehead pages on the nose; the skeletal pages agree
with the Whitehead pages one page later, relabeled by (s, t) ↦ (−t, s + 2t).
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from .cw import CWComplex, cellular_cohomology
from .filtrations import skeletal_filtration, whitehead_filtration_coeff
from ..complexes import ChainComplex
from ..decalage import deligne_decalage
from ..filtered import FilteredComplex
from ..indexing import IDENTITY, page_shift_transform
from ..pages import compare_pages, convergence_report, er_classical

logger = logging.getLogger(__name__)


@dataclass
class MaunderReport:
    """Outcome of the skeletal versus Whitehead comparison."""
    space: str
    r_max: int
    checks: Dict[str, List[str]] = field(default_factory=dict)
    e2_terms: Dict[Tuple[int, int], str] = field(default_factory=dict)

    def add(self, name: str, failures: List[str]):
        self.checks.setdefault(name, []).extend(failures)

    @property
    def failures(self) -> List[str]:
        return [f"{name}: {message}" for name, messages in self.checks.items() for message in messages]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "space": self.space,
            "r_max": self.r_max,
            "ok": self.ok,
            "checks": {name: list(messages) for name, messages in self.checks.items()},
            "e2": [{"s": s, "t": t, "module": module} for (s, t), module in sorted(self.e2_terms.items())],
        }


def e2_oracle_failures(X: CWComplex, M: ChainComplex, F: FilteredComplex = None) -> Tuple[List[str], Dict]:
    """Compare skeletal E_2 with cellular cohomology H^s(X; H_q M).

    The skeletal E_2 term at internal position (−s, q) is H^s(X; H_q M).

    Returns:
        (failures, map internal position → module summary of the page term)
    """
    F = F or skeletal_filtration(X, M)
    page = er_classical(F, 2)
    failures, terms = [], {}
    if M.is_zero():
        return failures, terms
    for q in M.degrees():
        coefficients = M.homology(q)
        expected = cellular_cohomology(X, coefficients)
        for s in range(0, X.dimension + 1):
            term = page.term(-s, q).iso
            if not term.is_zero:
                terms[(-s, q)] = term.summary()
            if term != expected[s]:
                failures.append(
                    f"E_2{(-s, q)} = {term.summary()} but H^{s}({X.name or 'X'}; {coefficients.summary()}) "
                    f"= {expected[s].summary()}"
                )
    return failures, terms


def maunder_compare(X: CWComplex, M: ChainComplex, r_max: int = 4, mutate: bool = False) -> MaunderReport:
    """Certify that the two filtrations give the same spectral sequence from E_2 on.

    Args:
        X: Finite CW complex
        M: Bounded coefficient complex
        r_max: Last page compared
        mutate: Compare skeletal and Whitehead pages without the relabeling
            (used to check that the comparison can fail)
    """
    F = skeletal_filtration(X, M)
    G = whitehead_filtration_coeff(X, M)
    report = MaunderReport(X.name or repr(X), r_max)
    report.add("validity", [f"skeletal: {v}" for v in F.validate()] + [f"whitehead: {v}" for v in G.validate()])
    if not report.ok:
        return report

    dec = deligne_decalage(F)
    if not dec.same_filtration(G):
        report.add("decalage", ["Dec of the skeletal filtration differs from the Whitehead filtration"])
    for r in range(1, r_max + 1):
        report.add("decalage", compare_pages(er_classical(dec, r), er_classical(G, r)).describe())

    relabel = IDENTITY if mutate else page_shift_transform(1)[0]
    for r in range(2, r_max + 1):
        report.add("page_shift", compare_pages(er_classical(G, r - 1), er_classical(F, r), relabel).describe())

    report.add("convergence", [f"skeletal: {m}" for m in convergence_report(F).mismatches])
    report.add("convergence", [f"whitehead: {m}" for m in convergence_report(G).mismatches])

    failures, report.e2_terms = e2_oracle_failures(X, M, F)
    report.add("e2_oracle", failures)
    if report.ok:
        logger.info(f"Maunder comparison for {report.space} clean through r = {r_max}")
    else:
        logger.warning(f"Maunder comparison for {report.space}: {len(report.failures)} failures")
    return report
