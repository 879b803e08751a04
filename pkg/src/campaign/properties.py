"""
Properties checked by the verification campaign.

Each property takes one instance and returns the list of violations, empty
when the property holds. ``mutate`` swaps in a deliberately wrong comparison
so the campaign can show that it detects failures:

    decalage     E^r(Dec F) is compared with E^r(F) instead of E^{r+1}(F)
    oracles      the interval page at r is compared with the classical page r+1
    convergence  gr H_* is compared with E^1 instead of E^∞
    leibniz      the x·d(y) term of the Leibniz rule is dropped
    maunder      skeletal and Whitehead pages are compared without relabeling
"""

import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional

from .generators import cw_instance, dga_instance, filtered_instance
from ..ahss import maunder_compare
from ..decalage import (
    comparison_map_e1_to_e2,
    deligne_decalage,
    iterated_comparison,
    secondary_filtration,
    truncation_graded_check,
    truncation_window,
)
from ..filtered import FilteredComplex
from ..formats import serialize_chain_complex, serialize_cw_complex, serialize_filtered_complex
from ..indexing import page_shift_transform
from ..multiplicative import FilteredDGA, check_leibniz, decalage_multiplicativity
from ..pages import compare_pages, convergence_report, e1_page, er_classical, er_lurie, page_turning_report

logger = logging.getLogger(__name__)


def _page_limit(F: FilteredComplex, r_max: Optional[int]) -> int:
    """Pages to check: up to r_max, and never past the stabilization index."""
    if r_max is None:
        return F.stabilization_index()
    return max(1, min(r_max, F.stabilization_index()))


def check_decalage(F: FilteredComplex, mutate: bool = False, r_max: int = 4) -> List[str]:
    """E^r(Dec F) ≅ E^{r+1}(F), the iterated form, and the graded identity behind it."""
    violations = [f"input: {v}" for v in F.validate()]
    if violations:
        return violations
    T, _ = page_shift_transform(1)
    dec = deligne_decalage(F)
    violations.extend(f"Dec: {v}" for v in dec.validate())
    limit = _page_limit(F, r_max)
    for r in range(1, limit + 1):
        shifted = er_classical(F, r if mutate else r + 1)
        violations.extend(compare_pages(er_classical(dec, r), shifted, T).describe())
    if mutate:
        return violations

    for r in range(1, min(limit, 3) + 1):
        violations.extend(iterated_comparison(F, r).describe())

    comparison = comparison_map_e1_to_e2(F)
    violations.extend(comparison.failures)

    secondary = {}
    for s, w in truncation_window(F):
        if s not in secondary:
            secondary[s] = secondary_filtration(F, s)
        violations.extend(truncation_graded_check(F, s, w, secondary[s]).mismatches)
    return violations


def check_oracles(F: FilteredComplex, mutate: bool = False, r_max: int = 4) -> List[str]:
    """Interval-graded and cycle/boundary pages agree, and each page's homology is the next page."""
    violations = [f"input: {v}" for v in F.validate()]
    if violations:
        return violations
    limit = _page_limit(F, r_max)
    violations.extend(compare_pages(e1_page(F), er_classical(F, 1)).describe())
    for r in range(1, limit + 1):
        classical = er_classical(F, r + 1 if mutate else r)
        violations.extend(compare_pages(er_lurie(F, r), classical).describe())
        if not mutate:
            violations.extend(page_turning_report(F, r))
    return violations


def check_convergence(F: FilteredComplex, mutate: bool = False, r_max: int = 4) -> List[str]:
    """gr of the induced filtration on H_n matches E^∞ along total degree n."""
    violations = [f"input: {v}" for v in F.validate()]
    if violations:
        return violations
    report = convergence_report(F, reference=e1_page(F) if mutate else None)
    return list(report.mismatches)


def check_leibniz_rule(A: FilteredDGA, mutate: bool = False, r_max: int = 3) -> List[str]:
    """Algebra laws, Leibniz on the first pages, and multiplicativity of Dec."""
    violations = [str(v) for v in A.validate()]
    if violations:
        return violations
    for r in range(1, _page_limit(A.base, r_max) + 1):
        report = check_leibniz_on_page(A, r, include_right_term=not mutate)
        violations.extend(report.violations)
    if not mutate:
        violations.extend(decalage_multiplicativity(A, deligne_decalage(A.base)))
    return violations


def check_leibniz_on_page(A: FilteredDGA, r: int, include_right_term: bool = True):
    return check_leibniz(er_classical(A.base, r), A, include_right_term=include_right_term)


def check_maunder(instance, mutate: bool = False, r_max: int = 4) -> List[str]:
    X, M = instance
    return maunder_compare(X, M, r_max, mutate=mutate).failures


@dataclass(frozen=True)
class Theorem:
    """A campaign property with its instance source and serializer."""
    name: str
    description: str
    instance: Callable[[int, int, Any], Any]
    check: Callable[..., List[str]]
    serialize: Callable[[Any], Dict[str, Any]]


def _serialize_pair(instance) -> Dict[str, Any]:
    X, M = instance
    return {"cw": serialize_cw_complex(X), "coefficients": serialize_chain_complex(M)}


THEOREMS: Dict[str, Theorem] = {
    "decalage": Theorem("decalage", "E^r(Dec F) matches E^{r+1}(F)", filtered_instance, check_decalage,
                        serialize_filtered_complex),
    "oracles": Theorem("oracles", "page constructions agree and pages turn", filtered_instance, check_oracles,
                       serialize_filtered_complex),
    "convergence": Theorem("convergence", "E^∞ assembles gr H_*", filtered_instance, check_convergence,
                           serialize_filtered_complex),
    "leibniz": Theorem("leibniz", "d^r is a derivation", dga_instance, check_leibniz_rule,
                       lambda A: serialize_filtered_complex(A.base, A)),
    "maunder": Theorem("maunder", "skeletal and Whitehead spectral sequences agree from E_2",
                       cw_instance, check_maunder, _serialize_pair),
}
