"""
The explicit comparison E^1(Dec F) → E^2(F), and its iterated relatives.

A class of E^1_{-t, s+2t}(Dec F) is represented by some x ∈ Dec(F)^t M_{s+t};
the map sends it to the class of the same x in E^2_{s,t}(F). Both terms are
built from the same numerator Z^2_{-s} and the same denominator, which the
report certifies together with injectivity, surjectivity and compatibility
with d^1(Dec) and d^2(F).
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .deligne import decalage_iterate, deligne_decalage
from ..filtered import FilteredComplex, FilteredMap
from ..indexing import apply, page_shift_transform
from ..linalg import ExactMatrix, contains, intersect, span_sum
from ..pages import ComparisonReport, Page, compare_pages, e1_page, er_classical, induced_page_map

logger = logging.getLogger(__name__)


@dataclass
class PositionCertificate:
    position: Tuple[int, int]
    dec_position: Tuple[int, int]
    matrix: ExactMatrix
    well_defined: bool
    injective: bool
    surjective: bool
    commutes: bool = True

    @property
    def ok(self) -> bool:
        return self.well_defined and self.injective and self.surjective and self.commutes


@dataclass
class ComparisonMapReport:
    certificates: Dict[Tuple[int, int], PositionCertificate] = field(default_factory=dict)
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def matrix(self, s: int, t: int) -> Optional[ExactMatrix]:
        certificate = self.certificates.get((s, t))
        return certificate.matrix if certificate else None


def comparison_map_e1_to_e2(F: FilteredComplex, dec_page: Page = None, e2: Page = None) -> ComparisonMapReport:
    T, _ = page_shift_transform(1)
    dec_page = dec_page or e1_page(deligne_decalage(F))
    e2 = e2 or er_classical(F, 2)
    report = ComparisonMapReport()
    for s, t in e2.positions():
        a = apply(T, s, t)
        source = dec_page.term(*a)
        target = e2.term(s, t)
        n1, d1 = source.numerator, source.denominator
        n2, d2 = target.numerator, target.denominator
        well_defined = contains(span_sum(n2, d2), n1) and contains(d2, d1)
        injective = contains(d1, intersect(span_sum(n1, d1), d2))
        surjective = contains(span_sum(n1, d2), n2)
        if source.subquotient.num_generators and well_defined:
            matrix = target.coordinates(source.subquotient.generator_lift)
        else:
            matrix = ExactMatrix.zeros(F.ring, target.subquotient.num_generators,
                                       source.subquotient.num_generators)
        report.certificates[(s, t)] = PositionCertificate((s, t), a, matrix, well_defined, injective, surjective)

    for (s, t), certificate in report.certificates.items():
        if not certificate.well_defined:
            continue
        target_pos = e2.target(s, t)
        onward = report.certificates.get(target_pos)
        if onward is None or not onward.well_defined:
            continue
        # d^2(F) ∘ φ against φ ∘ d^1(Dec)
        left = e2.differential(s, t) @ certificate.matrix
        right = onward.matrix @ dec_page.differential(*certificate.dec_position)
        end = e2.term(*target_pos).subquotient
        certificate.commutes = end.reduce(left - right).is_zero()

    for certificate in report.certificates.values():
        if not certificate.ok:
            flags = {k: getattr(certificate, k) for k in ("well_defined", "injective", "surjective", "commutes")}
            report.failures.append(f"E^1(Dec) → E^2 at {certificate.position}: {flags}")
    return report


def comparison_naturality(f: FilteredMap) -> List[str]:
    """Check φ_target ∘ E^1(Dec f) = E^2(f) ∘ φ_source on every position."""
    dec_f = f.with_source_and_target(deligne_decalage(f.source), deligne_decalage(f.target))
    dec_source, dec_target = e1_page(dec_f.source), e1_page(dec_f.target)
    e2_source, e2_target = er_classical(f.source, 2), er_classical(f.target, 2)
    phi_source = comparison_map_e1_to_e2(f.source, dec_source, e2_source)
    phi_target = comparison_map_e1_to_e2(f.target, dec_target, e2_target)
    on_dec = induced_page_map(dec_f, 1, dec_source, dec_target)
    on_e2 = induced_page_map(f, 2, e2_source, e2_target)
    T, _ = page_shift_transform(1)
    failures = []
    for s, t in sorted(set(e2_source.positions()) | set(e2_target.positions())):
        a = apply(T, s, t)
        left = on_e2.matrix(s, t) @ _or_zero(phi_source.matrix(s, t), e2_source.term(s, t), dec_source.term(*a))
        right = _or_zero(phi_target.matrix(s, t), e2_target.term(s, t), dec_target.term(*a)) @ on_dec.matrix(*a)
        if not e2_target.term(s, t).subquotient.reduce(left - right).is_zero():
            failures.append(f"Comparison map is not natural at {(s, t)}")
    return failures


def _or_zero(matrix, target_term, source_term) -> ExactMatrix:
    if matrix is not None:
        return matrix
    return ExactMatrix.zeros(target_term.subquotient.ring, target_term.subquotient.num_generators,
                             source_term.subquotient.num_generators)


def iterated_comparison(F: FilteredComplex, r: int) -> ComparisonReport:
    """E^1(Dec^{(r)} F) against E^{r+1}(F) under the page shift relabeling."""
    forward, _ = page_shift_transform(r)
    return compare_pages(e1_page(decalage_iterate(F, r)), er_classical(F, r + 1), forward)
