"""
Standard filtrations: constant, inserted, stupid, Whitehead, truncated p-adic,
and conversions from increasing filtrations and weight shifts.
"""

import logging
from typing import Iterable, Mapping, Tuple

from .filtration import CONSTANT_TAIL, ZERO_TAIL, FilteredComplex
from ..complexes import ChainComplex, truncation_spans
from ..linalg import ExactMatrix, Ring

logger = logging.getLogger(__name__)


def constant_filtration(C: ChainComplex) -> FilteredComplex:
    """F^s = C for every s."""
    steps = {(0, n): ExactMatrix.identity(C.ring, C.rank(n)) for n in C.degrees()}
    return FilteredComplex(C, [0], steps, CONSTANT_TAIL)


def inserted_filtration(C: ChainComplex, k: int = 0) -> FilteredComplex:
    """ins^k C: F^s = C for s <= k and 0 for s > k."""
    steps = {(k, n): ExactMatrix.identity(C.ring, C.rank(n)) for n in C.degrees()}
    return FilteredComplex(C, [k, k + 1], steps, ZERO_TAIL)


def stupid_filtration(C: ChainComplex) -> FilteredComplex:
    """σ^s: the terms of cohomological degree >= s (chain degree <= -s).

    ``C`` stores a cochain complex with C^k in chain degree -k.
    """
    if C.is_zero():
        return FilteredComplex(C, [0], {})
    n_min, n_max = C.degree_range
    k_min, k_max = -n_max, -n_min
    points = list(range(k_min, k_max + 2))
    steps = {}
    for s in points:
        for n in C.degrees():
            if -n >= s:
                steps[(s, n)] = ExactMatrix.identity(C.ring, C.rank(n))
    return FilteredComplex(C, points, steps, ZERO_TAIL)


def whitehead_filtration(C: ChainComplex) -> FilteredComplex:
    """F^s = τ_{≥s} C, the good truncations."""
    if C.is_zero():
        return FilteredComplex(C, [0], {})
    n_min, n_max = C.degree_range
    points = list(range(n_min, n_max + 2))
    steps = {}
    for s in points:
        for n, span in truncation_spans(C, s).items():
            steps[(s, n)] = span
    return FilteredComplex(C, points, steps, ZERO_TAIL)


def padic_filtration(p: int, N: int, ring: Ring = None) -> FilteredComplex:
    """Z in degree 0 with F^s = p^s Z for 0 <= s <= N and 0 above.

    The steps are not saturated; the result is flagged ``allow_unsaturated``.
    """
    ring = ring or Ring.integers()
    C = ChainComplex.concentrated(ring, 0)
    steps = {(s, 0): ExactMatrix(ring, [[p ** s]], (1, 1)) for s in range(N + 1)}
    return FilteredComplex(C, range(N + 2), steps, ZERO_TAIL, allow_unsaturated=True)


def from_increasing(C: ChainComplex, steps: Mapping[Tuple[int, int], ExactMatrix],
                    tail: str = ZERO_TAIL) -> FilteredComplex:
    """Store an increasing filtration F_s as the decreasing filtration F^{-s} = F_s.

    Args:
        C: Underlying complex
        steps: Map (index c, degree) → span of F_c M_n; F_s equals F_c for the
            smallest given c >= s and is all of M above the largest index
        tail: Behavior of F_s as s → -∞ (``zero`` or ``constant``)
    """
    indices = sorted({c for c, _ in steps}) or [0]
    decreasing = {(-c, n): matrix for (c, n), matrix in steps.items()}
    return FilteredComplex(C, [-c for c in indices], decreasing, tail)


def shift_filtration(F: FilteredComplex, k: int) -> FilteredComplex:
    """F(k)^s = F^{s+k}."""
    steps = {(b - k, n): F.step(b, n) for b in F.breakpoints for n in F.degrees()}
    return FilteredComplex(F.complex, [b - k for b in F.breakpoints], steps,
                           F.tail_high, F.allow_unsaturated)


def filtration_from_weights(C: ChainComplex, weights: Mapping[int, Iterable[int]],
                            tail: str = ZERO_TAIL) -> FilteredComplex:
    """Filter by basis weights: F^s M_n is spanned by basis vectors of weight >= s."""
    weights = {n: list(ws) for n, ws in weights.items()}
    all_weights = [w for ws in weights.values() for w in ws]
    if not all_weights:
        return FilteredComplex(C, [0], {}, tail)
    lo, hi = min(all_weights), max(all_weights)
    points = list(range(lo, hi + 1 if tail == CONSTANT_TAIL else hi + 2))
    steps = {}
    for s in points:
        for n in C.degrees():
            chosen = [j for j, w in enumerate(weights.get(n, [])) if w >= s]
            identity = ExactMatrix.identity(C.ring, C.rank(n))
            steps[(s, n)] = identity.select_columns(chosen)
    return FilteredComplex(C, points, steps, tail)
