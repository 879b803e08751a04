"""
Filtrations on the cochain complex Hom(C_•(X), M).

Skeletal: F^s consists of the maps vanishing on cells of dimension < s.
Whitehead: G^a = Hom(C_•(X), τ_{≥a} M).
"""

import logging
from typing import Tuple

from .cw import CWComplex
from ..complexes import ChainComplex, hom_complex, hom_filtration_level, truncation_spans
from ..filtered import FilteredComplex, ZERO_TAIL
from ..linalg import Ring

logger = logging.getLogger(__name__)


def cochain_complex(X: CWComplex, M: ChainComplex) -> Tuple[ChainComplex, ChainComplex]:
    """(C_•(X) over M's ring, Hom(C_•(X), M))."""
    C = X.cellular_chains(M.ring)
    return C, hom_complex(C, M)


def skeletal_filtration(X: CWComplex, M: ChainComplex) -> FilteredComplex:
    C, H = cochain_complex(X, M)
    points = list(range(0, X.dimension + 2))
    steps = {}
    for s in points:
        keep = {k for k in C.degrees() if k >= s}
        for n in H.degrees():
            steps[(s, n)] = hom_filtration_level(C, M, n, {}, source_degrees=keep)
    logger.debug(f"Skeletal filtration of {X} with coefficients {M}: breakpoints {points}")
    return FilteredComplex(H, points, steps, ZERO_TAIL)


def whitehead_filtration_coeff(X: CWComplex, M: ChainComplex) -> FilteredComplex:
    C, H = cochain_complex(X, M)
    if M.is_zero() or H.is_zero():
        return FilteredComplex(H, [0], {})
    m_min, m_max = M.degree_range
    points = list(range(m_min, m_max + 2))
    steps = {}
    for a in points:
        spans = truncation_spans(M, a)
        for n in H.degrees():
            steps[(a, n)] = hom_filtration_level(C, M, n, spans)
    return FilteredComplex(H, points, steps, ZERO_TAIL)


def integers_in_degree(degree: int = 0, ring: Ring = None) -> ChainComplex:
    return ChainComplex.concentrated(ring or Ring.integers(), degree)


def split_coefficients(degrees=(0, -2), ring: Ring = None) -> ChainComplex:
    """Copies of the ring in the given degrees with zero differential."""
    return ChainComplex(ring or Ring.integers(), {n: 1 for n in degrees}, {})


BUILTIN_COEFFICIENTS = {
    "Z": integers_in_degree,
    "Z+Z[-2]": split_coefficients,
}


def builtin_coefficients(name: str, ring: Ring = None) -> ChainComplex:
    """Look up a coefficient complex by name.

    Raises:
        KeyError: If the name is unknown
    """
    try:
        factory = BUILTIN_COEFFICIENTS[name]
    except KeyError:
        raise KeyError(f"Unknown coefficients {name!r}; known: {', '.join(BUILTIN_COEFFICIENTS)}") from None
    return factory(ring=ring)
