"""Truncated polynomial ⊗ exterior algebras used as worked and random examples."""

import logging
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from .dga import FilteredDGA
from ..complexes import ChainComplex
from ..filtered import filtration_from_weights
from ..linalg import ExactMatrix, Ring

logger = logging.getLogger(__name__)

Subset = Tuple[int, ...]


def _koszul_sign(S: Subset, T: Subset) -> int:
    """Sign of e_S · e_T = ± e_{S ∪ T} for disjoint sorted subsets."""
    inversions = sum(1 for s in S for t in T if s > t)
    return -1 if inversions % 2 else 1


def exterior_dga(N: int, exponents: Sequence[int], coefficients: Sequence[int] = None,
                 weight_x: int = 1, weights_e: Sequence[int] = None, ring: Ring = None) -> FilteredDGA:
    """Z[x]/(x^{N+1}) ⊗ Λ(e_1, …, e_g) with |x| = 0, |e_i| = 1 and d e_i = c_i x^{a_i}.

    M_p has basis x^k e_S for the g-choose-p sorted subsets S (in
    lexicographic order) and 0 <= k <= N, at index position(S) · (N + 1) + k.
    Odd products follow the Koszul sign rule, e_j e_i = -e_i e_j.
    The weight of x^k e_S is k·weight_x + Σ_{i ∈ S} weight_e[i].

    Raises:
        ValueError: If some d e_i would lower weights (a_i·weight_x < weight_e[i])
    """
    g = len(exponents)
    coefficients = list(coefficients) if coefficients is not None else [1] * g
    weights_e = list(weights_e) if weights_e is not None else [0] * g
    if len(coefficients) != g or len(weights_e) != g:
        raise ValueError(f"Expected {g} coefficients and weights, got {len(coefficients)} and {len(weights_e)}")
    for i, (a, c, w) in enumerate(zip(exponents, coefficients, weights_e)):
        if c and a <= N and a * weight_x < w:
            raise ValueError(f"d e_{i + 1} = {c}·x^{a} lowers weight: {a}·{weight_x} < {w}")

    ring = ring or Ring.integers()
    size = N + 1
    subsets: Dict[int, List[Subset]] = {p: list(combinations(range(g), p)) for p in range(g + 1)}
    position = {p: {S: i for i, S in enumerate(subsets[p])} for p in subsets}
    ranks = {p: len(subsets[p]) * size for p in subsets}

    def index(S: Subset, k: int) -> int:
        return position[len(S)][S] * size + k

    differentials = {}
    for p in range(1, g + 1):
        rows = [[0] * ranks[p] for _ in range(ranks[p - 1])]
        for S in subsets[p]:
            for k in range(size):
                for pos, i in enumerate(S):
                    if k + exponents[i] > N:
                        continue
                    face = S[:pos] + S[pos + 1:]
                    rows[index(face, k + exponents[i])][index(S, k)] += (-1) ** pos * coefficients[i]
        differentials[p] = ExactMatrix(ring, rows, (ranks[p - 1], ranks[p]))
    C = ChainComplex(ring, ranks, differentials)

    products = {}
    for p in subsets:
        for q in subsets:
            if p + q > g:
                continue
            table = [[0] * (ranks[p] * ranks[q]) for _ in range(ranks[p + q])]
            for S in subsets[p]:
                for T in subsets[q]:
                    if set(S) & set(T):
                        continue
                    union = tuple(sorted(S + T))
                    sign = _koszul_sign(S, T)
                    for i in range(size):
                        for j in range(size - i):
                            table[index(union, i + j)][index(S, i) * ranks[q] + index(T, j)] = sign
            products[(p, q)] = ExactMatrix(ring, table, (ranks[p + q], ranks[p] * ranks[q]))

    weights = {
        p: [k * weight_x + sum(weights_e[i] for i in S) for S in subsets[p] for k in range(size)]
        for p in subsets
    }
    base = filtration_from_weights(C, weights)
    unit = [1] + [0] * N
    return FilteredDGA(base, products, unit, commutative=True)


def monomial_dga(N: int, a: int = 1, weight_x: int = 1, weight_e: int = 0, ring: Ring = None) -> FilteredDGA:
    """Z[x]/(x^{N+1}) ⊗ Λ(e) with |x| = 0, |e| = 1 and d e = x^a.

    Monomials are filtered by weight: x^k has weight k·weight_x and x^k e has
    weight k·weight_x + weight_e.

    Raises:
        ValueError: If d would lower weights (a·weight_x < weight_e)
    """
    if a * weight_x < weight_e:
        raise ValueError(f"d e = x^{a} lowers weight: {a}·{weight_x} < {weight_e}")
    return exterior_dga(N, [a], [1], weight_x=weight_x, weights_e=[weight_e], ring=ring)


def koszul_dga(N: int = 2, ring: Ring = None) -> FilteredDGA:
    """The Koszul example: d(x^k e) = x^{k+1}, filtered by powers of (x)."""
    return monomial_dga(N, a=1, weight_x=1, weight_e=0, ring=ring)
