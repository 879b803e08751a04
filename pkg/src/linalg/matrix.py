"""
Immutable dense matrices over an exact ring.

Entries are kept as canonical Python values so matrices compare, hash and
serialize without touching sympy; products and eliminations go through
sympy's ``DomainMatrix``.
"""

import logging
from typing import Iterable, List, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from .rings import Ring, Scalar
from ..exceptions import RingMismatchError, ShapeError

logger = logging.getLogger(__name__)


class ExactMatrix:
    """A rows × cols matrix over a :class:`Ring`.

    Columns are the usual carrier of spans: a submodule of R^m is passed
    around as an m × k matrix whose columns generate it.
    """

    __slots__ = ("ring", "_rows", "_shape", "_dm")

    def __init__(self, ring: Ring, rows: Iterable[Iterable], shape: Optional[Tuple[int, int]] = None):
        data = tuple(tuple(ring.normalize(x) for x in row) for row in rows)
        if shape is None:
            n_rows = len(data)
            n_cols = len(data[0]) if data else 0
        else:
            n_rows, n_cols = shape
        if len(data) != n_rows or any(len(row) != n_cols for row in data):
            raise ShapeError(f"Entries do not match shape {n_rows}x{n_cols}")
        self.ring = ring
        self._rows = data
        self._shape = (n_rows, n_cols)
        self._dm = None

    # -- construction ---------------------------------------------------

    @classmethod
    def zeros(cls, ring: Ring, rows: int, cols: int) -> "ExactMatrix":
        return cls(ring, [[0] * cols for _ in range(rows)], (rows, cols))

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "ExactMatrix":
        return cls(ring, [[1 if i == j else 0 for j in range(n)] for i in range(n)], (n, n))

    @classmethod
    def from_columns(cls, ring: Ring, n_rows: int, columns: Sequence[Sequence]) -> "ExactMatrix":
        for col in columns:
            if len(col) != n_rows:
                raise ShapeError(f"Column of length {len(col)} in ambient of rank {n_rows}")
        return cls(ring, [[col[i] for col in columns] for i in range(n_rows)], (n_rows, len(columns)))

    @classmethod
    def diagonal(cls, ring: Ring, entries: Sequence, rows: Optional[int] = None,
                 cols: Optional[int] = None) -> "ExactMatrix":
        rows = len(entries) if rows is None else rows
        cols = len(entries) if cols is None else cols
        data = [[0] * cols for _ in range(rows)]
        for i, value in enumerate(entries):
            data[i][i] = value
        return cls(ring, data, (rows, cols))

    @classmethod
    def from_domain_matrix(cls, ring: Ring, dm: DomainMatrix) -> "ExactMatrix":
        rows, cols = dm.shape
        data = [[ring.from_domain(x) for x in row] for row in dm.to_list()] if rows and cols else \
            [[] for _ in range(rows)]
        return cls(ring, data, (rows, cols))

    # -- accessors ------------------------------------------------------

    @property
    def shape(self) -> Tuple[int, int]:
        return self._shape

    @property
    def rows(self) -> int:
        return self._shape[0]

    @property
    def cols(self) -> int:
        return self._shape[1]

    def entry(self, i: int, j: int) -> Scalar:
        return self._rows[i][j]

    def to_rows(self) -> List[List[Scalar]]:
        return [list(row) for row in self._rows]

    def column(self, j: int) -> List[Scalar]:
        return [row[j] for row in self._rows]

    def columns(self) -> List[List[Scalar]]:
        return [self.column(j) for j in range(self.cols)]

    def is_zero(self) -> bool:
        return all(x == 0 for row in self._rows for x in row)

    def to_domain_matrix(self) -> DomainMatrix:
        if self._dm is None:
            domain = self.ring.domain
            self._dm = DomainMatrix(
                [[self.ring.to_domain(x) for x in row] for row in self._rows],
                self._shape, domain,
            )
        return self._dm

    # -- algebra --------------------------------------------------------

    def _check_ring(self, other: "ExactMatrix"):
        if other.ring != self.ring:
            raise RingMismatchError(f"Ring mismatch: {self.ring} vs {other.ring}")

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_ring(other)
        if self.cols != other.rows:
            raise ShapeError(f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        if self.rows == 0 or other.cols == 0 or self.cols == 0:
            return ExactMatrix.zeros(self.ring, self.rows, other.cols)
        product = self.to_domain_matrix().matmul(other.to_domain_matrix())
        return ExactMatrix.from_domain_matrix(self.ring, product)

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_ring(other)
        if self.shape != other.shape:
            raise ShapeError(f"Cannot add {self.shape} and {other.shape}")
        return ExactMatrix(self.ring, [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self._rows, other._rows)],
                           self.shape)

    def __neg__(self) -> "ExactMatrix":
        return self.scale(-1)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self + (-other)

    def scale(self, c: Scalar) -> "ExactMatrix":
        return ExactMatrix(self.ring, [[c * x for x in row] for row in self._rows], self.shape)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.ring, [[self._rows[i][j] for i in range(self.rows)] for j in range(self.cols)],
                           (self.cols, self.rows))

    @property
    def T(self) -> "ExactMatrix":
        return self.transpose()

    def hstack(self, *others: "ExactMatrix") -> "ExactMatrix":
        result = [list(row) for row in self._rows]
        cols = self.cols
        for other in others:
            self._check_ring(other)
            if other.rows != self.rows:
                raise ShapeError(f"hstack of {self.rows} rows with {other.rows} rows")
            for i, row in enumerate(other._rows):
                result[i].extend(row)
            cols += other.cols
        return ExactMatrix(self.ring, result, (self.rows, cols))

    def vstack(self, *others: "ExactMatrix") -> "ExactMatrix":
        result = [list(row) for row in self._rows]
        rows = self.rows
        for other in others:
            self._check_ring(other)
            if other.cols != self.cols:
                raise ShapeError(f"vstack of {self.cols} columns with {other.cols} columns")
            result.extend(list(row) for row in other._rows)
            rows += other.rows
        return ExactMatrix(self.ring, result, (rows, self.cols))

    def select_columns(self, indices: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix(self.ring, [[row[j] for j in indices] for row in self._rows], (self.rows, len(indices)))

    def select_rows(self, indices: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix(self.ring, [self._rows[i] for i in indices], (len(indices), self.cols))

    def block(self, row_start: int, row_stop: int, col_start: int, col_stop: int) -> "ExactMatrix":
        return ExactMatrix(
            self.ring,
            [row[col_start:col_stop] for row in self._rows[row_start:row_stop]],
            (row_stop - row_start, col_stop - col_start),
        )

    def convert(self, ring: Ring) -> "ExactMatrix":
        """Reinterpret the entries in another ring (e.g. integer matrices mod p)."""
        return ExactMatrix(ring, self._rows, self.shape)

    def with_row_scaled(self, i: int, c: Scalar) -> "ExactMatrix":
        data = self.to_rows()
        data[i] = [c * x for x in data[i]]
        return ExactMatrix(self.ring, data, self.shape)

    # -- dunder ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.ring == other.ring and self._shape == other._shape and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.ring, self._shape, self._rows))

    def __repr__(self) -> str:
        return f"ExactMatrix({self.ring.name}, {self.rows}x{self.cols}, {self.to_rows()})"


def kron(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """Kronecker product; row-major vectorization satisfies vec(AXB) = (A ⊗ Bᵀ) vec(X)."""
    if a.ring != b.ring:
        raise RingMismatchError(f"Ring mismatch: {a.ring} vs {b.ring}")
    rows, cols = a.rows * b.rows, a.cols * b.cols
    data = [[0] * cols for _ in range(rows)]
    for i in range(a.rows):
        for j in range(a.cols):
            x = a.entry(i, j)
            if x == 0:
                continue
            for k in range(b.rows):
                for m in range(b.cols):
                    y = b.entry(k, m)
                    if y:
                        data[i * b.rows + k][j * b.cols + m] = x * y
    return ExactMatrix(a.ring, data, (rows, cols))


def block_diagonal(ring: Ring, blocks: Sequence[ExactMatrix]) -> ExactMatrix:
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    data = [[0] * cols for _ in range(rows)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                data[r0 + i][c0 + j] = b.entry(i, j)
        r0 += b.rows
        c0 += b.cols
    return ExactMatrix(ring, data, (rows, cols))


def column_vector(ring: Ring, values: Sequence) -> ExactMatrix:
    return ExactMatrix(ring, [[v] for v in values], (len(values), 1))
