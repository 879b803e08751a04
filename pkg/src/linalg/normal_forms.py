"""
Smith normal form and the span calculus built on it.

Over the integers the decomposition comes from sympy's
``smith_normal_decomp``; over fields a rank-revealing echelon decomposition
with the same contract U·A·V = D is assembled from two ``rref`` calls.
Every other operation here (kernels, images, solving, intersections,
preimages) is read off a single decomposition.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Tuple

from sympy import QQ, ZZ
from sympy.polys.matrices.normalforms import smith_normal_decomp

from .matrix import ExactMatrix
from .rings import Ring, Scalar
from ..exceptions import ShapeError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SmithDecomposition:
    """U·A·V = D with U, V invertible and D diagonal, d_1 | d_2 | ..."""
    U: ExactMatrix
    D: ExactMatrix
    V: ExactMatrix
    diagonal: Tuple[Scalar, ...]
    rank: int

    @property
    def U_inverse(self) -> ExactMatrix:
        return inverse(self.U)


def _integer_decomposition(A: ExactMatrix) -> Tuple[ExactMatrix, ExactMatrix, ExactMatrix]:
    ring = A.ring
    D, S, T = smith_normal_decomp(A.to_domain_matrix())
    U = ExactMatrix.from_domain_matrix(ring, S)
    D = ExactMatrix.from_domain_matrix(ring, D)
    V = ExactMatrix.from_domain_matrix(ring, T)
    for i in range(min(D.rows, D.cols)):
        if D.entry(i, i) < 0:
            U = U.with_row_scaled(i, -1)
            D = D.with_row_scaled(i, -1)
    return U, D, V


def _field_decomposition(A: ExactMatrix) -> Tuple[ExactMatrix, ExactMatrix, ExactMatrix]:
    ring = A.ring
    m, n = A.shape
    reduced, pivots = A.hstack(ExactMatrix.identity(ring, m)).to_domain_matrix().rref()
    reduced = ExactMatrix.from_domain_matrix(ring, reduced)
    R = reduced.block(0, m, 0, n)
    U = reduced.block(0, m, n, n + m)
    rank = sum(1 for p in pivots if p < n)

    # Column operations: the rref of Rᵀ is [[I_r, 0], [0, 0]].
    column_reduced, _ = R.transpose().hstack(ExactMatrix.identity(ring, n)).to_domain_matrix().rref()
    column_reduced = ExactMatrix.from_domain_matrix(ring, column_reduced)
    V = column_reduced.block(0, n, m, m + n).transpose()
    D = ExactMatrix.diagonal(ring, [1] * rank, m, n)
    return U, D, V


@lru_cache(maxsize=8192)
def decompose(A: ExactMatrix) -> SmithDecomposition:
    """Smith (or echelon, over fields) decomposition of A."""
    ring = A.ring
    m, n = A.shape
    if m == 0 or n == 0:
        U, D, V = ExactMatrix.identity(ring, m), A, ExactMatrix.identity(ring, n)
    elif ring.is_field:
        U, D, V = _field_decomposition(A)
    else:
        U, D, V = _integer_decomposition(A)
    diagonal = tuple(D.entry(i, i) for i in range(min(m, n)))
    rank = sum(1 for d in diagonal if d != 0)
    return SmithDecomposition(U, D, V, diagonal, rank)


def smith_normal_form(A: ExactMatrix) -> Tuple[ExactMatrix, ExactMatrix, ExactMatrix]:
    """Return (U, D, V) with U·A·V = D.

    Over the integers D is the Smith normal form with nonnegative diagonal;
    over fields D is [[I_r, 0], [0, 0]].
    """
    result = decompose(A)
    return result.U, result.D, result.V


def invariant_factors(A: ExactMatrix) -> List[Scalar]:
    return [d for d in decompose(A).diagonal if d != 0]


def rank(A: ExactMatrix) -> int:
    return decompose(A).rank


@lru_cache(maxsize=4096)
def inverse(M: ExactMatrix) -> ExactMatrix:
    """Inverse of a matrix that is invertible over its ring.

    Raises:
        ShapeError: If M is not square
    """
    if M.rows != M.cols:
        raise ShapeError(f"Cannot invert a {M.rows}x{M.cols} matrix")
    if M.rows == 0:
        return M
    dm = M.to_domain_matrix()
    if M.ring.is_field:
        return ExactMatrix.from_domain_matrix(M.ring, dm.inv())
    inv = dm.convert_to(QQ).inv().convert_to(ZZ)
    return ExactMatrix.from_domain_matrix(M.ring, inv)


def kernel_basis(A: ExactMatrix) -> ExactMatrix:
    """Columns forming a basis of ker(A); saturated over the integers."""
    result = decompose(A)
    n = A.cols
    return result.V.block(0, n, result.rank, n)


def image_basis(A: ExactMatrix) -> ExactMatrix:
    """Linearly independent columns spanning the column space of A."""
    result = decompose(A)
    if result.rank == 0:
        return ExactMatrix.zeros(A.ring, A.rows, 0)
    U_inv = inverse(result.U)
    basis = U_inv.block(0, A.rows, 0, result.rank)
    scaled = [
        [basis.entry(i, j) * result.diagonal[j] for j in range(result.rank)]
        for i in range(A.rows)
    ]
    return ExactMatrix(A.ring, scaled, (A.rows, result.rank))


def saturate(A: ExactMatrix) -> ExactMatrix:
    """Basis of (span(A) ⊗ Q) ∩ R^m; equals image_basis over fields."""
    result = decompose(A)
    return inverse(result.U).block(0, A.rows, 0, result.rank)


def is_saturated(A: ExactMatrix) -> bool:
    if A.ring.is_field:
        return True
    return all(d in (0, 1) for d in decompose(A).diagonal)


def solve(A: ExactMatrix, B: ExactMatrix) -> Optional[ExactMatrix]:
    """Find X with A·X = B, or None when some column of B is outside span(A)."""
    if A.rows != B.rows:
        raise ShapeError(f"solve: {A.rows} rows against {B.rows} rows")
    ring = A.ring
    result = decompose(A)
    n, k = A.cols, B.cols
    if k == 0:
        return ExactMatrix.zeros(ring, n, 0)
    C = result.U @ B
    Y = [[0] * k for _ in range(n)]
    for i in range(C.rows):
        d = result.diagonal[i] if i < len(result.diagonal) else 0
        for j in range(k):
            c = C.entry(i, j)
            if d == 0:
                if c != 0:
                    return None
                continue
            if not ring.divides(d, c):
                return None
            Y[i][j] = ring.divide(c, d)
    return result.V @ ExactMatrix(ring, Y, (n, k))


def contains(A: ExactMatrix, B: ExactMatrix) -> bool:
    """Whether span(B) ⊆ span(A)."""
    if B.cols == 0 or B.is_zero():
        return True
    return solve(A, B) is not None


def span_equal(A: ExactMatrix, B: ExactMatrix) -> bool:
    return contains(A, B) and contains(B, A)


def span_sum(first: ExactMatrix, *others: ExactMatrix) -> ExactMatrix:
    """Basis of span(first) + span(others)."""
    return image_basis(first.hstack(*others))


def intersect(A: ExactMatrix, B: ExactMatrix) -> ExactMatrix:
    """Basis of span(A) ∩ span(B)."""
    if A.rows != B.rows:
        raise ShapeError(f"intersect: {A.rows} rows against {B.rows} rows")
    if A.cols == 0 or B.cols == 0:
        return ExactMatrix.zeros(A.ring, A.rows, 0)
    K = kernel_basis(A.hstack(-B))
    return image_basis(A @ K.block(0, A.cols, 0, K.cols))


def preimage(A: ExactMatrix, S: ExactMatrix) -> ExactMatrix:
    """Basis of {x : A·x ∈ span(S)}."""
    if A.rows != S.rows:
        raise ShapeError(f"preimage: {A.rows} rows against {S.rows} rows")
    if S.cols == 0:
        return kernel_basis(A)
    K = kernel_basis(A.hstack(-S))
    return image_basis(K.block(0, A.cols, 0, K.cols))


def restricted_preimage(basis: ExactMatrix, A: ExactMatrix, S: ExactMatrix) -> ExactMatrix:
    """Basis (in ambient coordinates) of {x ∈ span(basis) : A·x ∈ span(S)}."""
    if basis.cols == 0:
        return basis
    return image_basis(basis @ preimage(A @ basis, S))
