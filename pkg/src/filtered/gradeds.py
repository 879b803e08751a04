"""
Associated gradeds and interval gradeds.

``interval_homology`` is the span-level workhorse shared by the page
constructions: H_n(F^a/F^b) presented inside M_n as

    {x ∈ F^a M_n : dx ∈ F^b M_{n-1}}  /  (d F^a M_{n+1} + F^b M_n)
"""

import logging
from typing import Dict, Optional

from .filtration import FilteredComplex, ZERO_TAIL
from ..complexes import ChainComplex
from ..exceptions import InvalidFiltrationError
from ..linalg import ExactMatrix, FgModule, Subquotient, image_basis, restricted_preimage, span_sum

logger = logging.getLogger(__name__)


def interval_cycles(F: FilteredComplex, a: int, b: int, n: int) -> ExactMatrix:
    """{x ∈ F^a M_n : dx ∈ F^b M_{n-1}}."""
    return restricted_preimage(F.level(a, n), F.differential(n), F.level(b, n - 1))


def interval_boundaries(F: FilteredComplex, a: int, b: int, n: int) -> ExactMatrix:
    """d F^a M_{n+1} + F^b M_n."""
    return span_sum(F.differential(n + 1) @ F.level(a, n + 1), F.level(b, n))


def interval_homology(F: FilteredComplex, a: int, b: int, n: int) -> Subquotient:
    """H_n(gr^{[a,b)}) as a subquotient of M_n."""
    return Subquotient(F.ring, F.complex.rank(n), interval_cycles(F, a, b, n), interval_boundaries(F, a, b, n))


def graded_homology(F: FilteredComplex, s: int, n: int) -> FgModule:
    """H_n(gr^s); defined even when gr^s has torsion."""
    return interval_homology(F, s, s + 1, n).module


def graded_module(F: FilteredComplex, s: int, n: int) -> FgModule:
    """gr^s M_n = F^s M_n / F^{s+1} M_n."""
    return Subquotient(F.ring, F.complex.rank(n), F.level(s, n), F.level(s + 1, n)).module


def _quotient_complex(F: FilteredComplex, a: int, b: Optional[int]):
    """F^a/F^b (b = None for F^a) on free bases, with the per-degree subquotients.

    Raises:
        InvalidFiltrationError: If a quotient has torsion and so has no free basis
    """
    quotients: Dict[int, Subquotient] = {}
    for n in F.degrees():
        rank = F.complex.rank(n)
        lower = F.level(b, n) if b is not None else ExactMatrix.zeros(F.ring, rank, 0)
        quotient = Subquotient(F.ring, rank, F.level(a, n), lower)
        if quotient.module.invariant_factors:
            raise InvalidFiltrationError(
                f"F^{a} M_{n} / F^{b} M_{n} has torsion {quotient.module.summary()}; "
                f"use graded_module or graded_homology instead"
            )
        quotients[n] = quotient
    ranks = {n: q.num_generators for n, q in quotients.items()}
    differentials = {}
    for n, q in quotients.items():
        target = quotients.get(n - 1)
        if target is None or q.num_generators == 0 or target.num_generators == 0:
            continue
        differentials[n] = target.coordinates(F.differential(n) @ q.generator_lift)
    return ChainComplex(F.ring, ranks, differentials), quotients


def graded_piece(F: FilteredComplex, s: int) -> ChainComplex:
    """gr^s = F^s/F^{s+1} presented on a free basis with the induced differential.

    Raises:
        InvalidFiltrationError: If some gr^s M_n has torsion
    """
    complex_, _ = _quotient_complex(F, s, s + 1)
    return complex_


def interval_graded(F: FilteredComplex, i: int, j: Optional[int] = None) -> FilteredComplex:
    """gr^{[i,j)} = F^i/F^j with its residual filtration (j = None means ∞).

    Raises:
        ValueError: If i > j
        InvalidFiltrationError: If the quotient has torsion
    """
    if j is not None and i > j:
        raise ValueError(f"Empty interval [{i}, {j})")
    if j is not None and i == j:
        return FilteredComplex(ChainComplex.zero(F.ring), [i], {})
    complex_, quotients = _quotient_complex(F, i, j)
    inner = [b for b in F.breakpoints if b > i and (j is None or b < j)]
    points = [i] + inner
    steps = {}
    for n, quotient in quotients.items():
        steps[(i, n)] = ExactMatrix.identity(F.ring, quotient.num_generators)
        for b in inner:
            steps[(b, n)] = image_basis(quotient.coordinates(F.level(b, n)))
    if j is not None:
        points.append(j)
        tail = ZERO_TAIL
    else:
        tail = F.tail_high
    return FilteredComplex(complex_, points, steps, tail, F.allow_unsaturated)
