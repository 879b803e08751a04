"""
Constructions on chain complexes: good truncation, shift, subcomplexes,
Hom complexes and Euler characteristics.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Mapping, Tuple

from .chain_complex import ChainComplex
from ..exceptions import InvalidComplexError, RingMismatchError, ShapeError
from ..linalg import ExactMatrix, Ring, block_diagonal, image_basis, kron, solve

logger = logging.getLogger(__name__)


def from_cochain(ring: Ring, ranks: Mapping[int, int], differentials: Mapping[int, ExactMatrix]) -> ChainComplex:
    """Store a cochain complex C^k (with d^k: C^k → C^{k+1}) as M_{-k}."""
    chain_ranks = {-k: r for k, r in ranks.items()}
    # d^k: C^k → C^{k+1} becomes d_{-k}: M_{-k} → M_{-k-1}
    chain_diffs = {-k: d for k, d in differentials.items()}
    return ChainComplex(ring, chain_ranks, chain_diffs)


def truncation_spans(C: ChainComplex, a: int) -> Dict[int, ExactMatrix]:
    """Spans of τ_{≥a}C inside C: full above a, cycles in degree a, zero below."""
    spans = {}
    for n in C.degrees():
        if n > a:
            spans[n] = ExactMatrix.identity(C.ring, C.rank(n))
        elif n == a:
            spans[n] = C.cycles(n)
        else:
            spans[n] = ExactMatrix.zeros(C.ring, C.rank(n), 0)
    return spans


def subcomplex(C: ChainComplex, bases: Mapping[int, ExactMatrix]) -> Tuple[ChainComplex, Dict[int, ExactMatrix]]:
    """Restrict C to degreewise submodules closed under d.

    Args:
        C: Ambient complex
        bases: Map degree → matrix of spanning columns (degrees not listed are zero)

    Returns:
        The subcomplex on free bases, and the inclusion matrices into C

    Raises:
        InvalidComplexError: If d does not preserve the submodules
    """
    inclusions = {n: image_basis(B) for n, B in bases.items()}
    ranks = {n: B.cols for n, B in inclusions.items()}
    differentials = {}
    for n, B in inclusions.items():
        if B.cols == 0:
            continue
        target = inclusions.get(n - 1)
        if target is None or target.cols == 0:
            if not (C.differential(n) @ B).is_zero():
                raise InvalidComplexError(f"Submodule in degree {n} is not closed under d", degree=n)
            continue
        restricted = solve(target, C.differential(n) @ B)
        if restricted is None:
            raise InvalidComplexError(f"Submodule in degree {n} is not closed under d", degree=n)
        differentials[n] = restricted
    return ChainComplex(C.ring, ranks, differentials), inclusions


def truncate_geq(C: ChainComplex, a: int) -> ChainComplex:
    """Good truncation τ_{≥a}C, presented on saturated bases."""
    complex_, _ = subcomplex(C, truncation_spans(C, a))
    return complex_


def shift(C: ChainComplex, k: int) -> ChainComplex:
    """C[k] with C[k]_n = C_{n-k} and differential (-1)^k d."""
    sign = -1 if k % 2 else 1
    ranks = {n + k: r for n, r in C.ranks.items()}
    differentials = {n + k: d.scale(sign) for n, d in C.differentials.items()}
    return ChainComplex(C.ring, ranks, differentials)


def euler_characteristic(C: ChainComplex) -> int:
    return sum((-1) ** (n % 2) * r for n, r in C.ranks.items())


def homology_euler_characteristic(C: ChainComplex) -> int:
    """Alternating sum of homology ranks (free ranks over the integers)."""
    return sum((-1) ** (n % 2) * C.homology(n).free_rank for n in C.degrees())


@dataclass(frozen=True)
class HomBlock:
    """Hom(C_k, M_{k+n}) inside Hom(C, M)_n, flattened row-major."""
    source_degree: int
    offset: int
    target_rank: int
    source_rank: int

    @property
    def size(self) -> int:
        return self.target_rank * self.source_rank

    def index(self, target: int, source: int) -> int:
        return self.offset + target * self.source_rank + source


def hom_layout(C: ChainComplex, M: ChainComplex) -> Dict[int, List[HomBlock]]:
    """Block layout of Hom(C, M) per degree, blocks ordered by C-degree."""
    if C.is_zero() or M.is_zero():
        return {}
    c_min, c_max = C.degree_range
    m_min, m_max = M.degree_range
    layout = {}
    for n in range(m_min - c_max, m_max - c_min + 1):
        offset = 0
        blocks = []
        for k in C.degrees():
            q = M.rank(k + n)
            if q == 0:
                continue
            blocks.append(HomBlock(k, offset, q, C.rank(k)))
            offset += q * C.rank(k)
        if blocks:
            layout[n] = blocks
    return layout


def hom_complex(C: ChainComplex, M: ChainComplex) -> ChainComplex:
    """Hom(C, M) with (df)_k = d_M f_k - (-1)^n f_{k-1} ∂_k for f of degree n.

    Raises:
        RingMismatchError: If C and M are over different rings
    """
    if C.ring != M.ring:
        raise RingMismatchError(f"Hom complex of {C.ring} and {M.ring} complexes")
    ring = C.ring
    layout = hom_layout(C, M)
    ranks = {n: sum(b.size for b in blocks) for n, blocks in layout.items()}
    differentials = {}
    for n, blocks in layout.items():
        targets = layout.get(n - 1)
        if not targets:
            continue
        sign = 1 if n % 2 else -1  # -(-1)^n
        data = [[0] * ranks[n] for _ in range(ranks[n - 1])]
        sources = {b.source_degree: b for b in blocks}
        for tb in targets:
            k = tb.source_degree
            same = sources.get(k)
            if same is not None:
                part = kron(M.differential(k + n), ExactMatrix.identity(ring, C.rank(k)))
                _place(data, part, tb.offset, same.offset)
            lower = sources.get(k - 1)
            if lower is not None:
                part = kron(ExactMatrix.identity(ring, tb.target_rank), C.differential(k).transpose())
                _place(data, part.scale(sign), tb.offset, lower.offset)
        differentials[n] = ExactMatrix(ring, data, (ranks[n - 1], ranks[n]))
    return ChainComplex(ring, ranks, differentials)


def hom_filtration_level(C: ChainComplex, M: ChainComplex, n: int,
                         target_spans: Mapping[int, ExactMatrix],
                         source_degrees=None) -> ExactMatrix:
    """Span of maps in Hom(C, M)_n with f_k landing in ``target_spans[k+n]``.

    Blocks whose source degree is not in ``source_degrees`` (when given) are
    forced to vanish.
    """
    blocks = hom_layout(C, M).get(n, [])
    pieces = []
    for block in blocks:
        if source_degrees is not None and block.source_degree not in source_degrees:
            pieces.append(ExactMatrix.zeros(C.ring, block.size, 0))
            continue
        T = target_spans.get(block.source_degree + n)
        if T is None:
            T = ExactMatrix.identity(C.ring, block.target_rank)
        if T.rows != block.target_rank:
            raise ShapeError(f"Target span has {T.rows} rows, expected {block.target_rank}")
        pieces.append(kron(T, ExactMatrix.identity(C.ring, block.source_rank)))
    total = sum(b.size for b in blocks)
    if not pieces:
        return ExactMatrix.zeros(C.ring, total, 0)
    return block_diagonal(C.ring, pieces)


def _place(data, part: ExactMatrix, row0: int, col0: int):
    for i in range(part.rows):
        for j in range(part.cols):
            value = part.entry(i, j)
            if value:
                data[row0 + i][col0 + j] = data[row0 + i][col0 + j] + value
