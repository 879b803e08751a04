"""
Filtered differential graded algebras given by basis matrices.

The product μ_{m,n}: M_m ⊗ M_n → M_{m+n} is a rank_{m+n} × (rank_m · rank_n)
matrix; the basis vector e_i ⊗ f_j sits at column i · rank_n + j.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from ..filtered import CONSTANT_TAIL, FilteredComplex, Violation
from ..exceptions import ShapeError
from ..linalg import ExactMatrix, column_vector, contains, kron

logger = logging.getLogger(__name__)


class FilteredDGA:
    """A filtered complex with an associative product compatible with d and F.

    Args:
        base: The filtered complex
        products: Map (m, n) → μ_{m,n}; missing pairs are zero
        unit: Optional coordinates of the unit in M_0
        commutative: Declare μ graded-commutative

    Raises:
        ShapeError: If a product matrix has the wrong shape
    """

    def __init__(self, base: FilteredComplex, products: Mapping[Tuple[int, int], ExactMatrix],
                 unit: Optional[Sequence] = None, commutative: bool = False):
        self.base = base
        self.ring = base.ring
        self.commutative = commutative
        C = base.complex
        self._products: Dict[Tuple[int, int], ExactMatrix] = {}
        for (m, n), matrix in products.items():
            expected = (C.rank(m + n), C.rank(m) * C.rank(n))
            if matrix.shape != expected:
                raise ShapeError(f"μ_{m},{n} has shape {matrix.shape}, expected {expected}")
            if not matrix.is_zero():
                self._products[(int(m), int(n))] = matrix
        self.unit = column_vector(self.ring, list(unit)) if unit is not None else None
        if self.unit is not None and self.unit.rows != C.rank(0):
            raise ShapeError(f"Unit has length {self.unit.rows}, M_0 has rank {C.rank(0)}")

    @property
    def products(self) -> Dict[Tuple[int, int], ExactMatrix]:
        return dict(self._products)

    def product(self, m: int, n: int) -> ExactMatrix:
        matrix = self._products.get((m, n))
        if matrix is None:
            C = self.base.complex
            return ExactMatrix.zeros(self.ring, C.rank(m + n), C.rank(m) * C.rank(n))
        return matrix

    def multiply(self, m: int, x: ExactMatrix, n: int, y: ExactMatrix) -> ExactMatrix:
        """All products of the columns of x (in M_m) with the columns of y (in M_n).

        Column i · y.cols + j of the result is x_i · y_j.
        """
        return self.product(m, n) @ kron(x, y)

    def with_base(self, base: FilteredComplex) -> "FilteredDGA":
        """The same product on a refiltered copy of the complex."""
        unit = self.unit.column(0) if self.unit is not None else None
        return FilteredDGA(base, self._products, unit, self.commutative)

    # -- laws -----------------------------------------------------------

    def _degree_pairs(self) -> List[Tuple[int, int]]:
        degrees = self.base.degrees()
        return [(m, n) for m in degrees for n in degrees]

    def leibniz_violations(self) -> List[Violation]:
        """d μ_{m,n} = μ_{m-1,n}(d ⊗ 1) + (-1)^m μ_{m,n-1}(1 ⊗ d)."""
        C = self.base.complex
        ring = self.ring
        bad = []
        for m, n in self._degree_pairs():
            left = C.differential(m + n) @ self.product(m, n)
            first = self.product(m - 1, n) @ kron(C.differential(m), ExactMatrix.identity(ring, C.rank(n)))
            second = self.product(m, n - 1) @ kron(ExactMatrix.identity(ring, C.rank(m)), C.differential(n))
            right = first + second.scale(-1 if m % 2 else 1)
            if left != right:
                bad.append(Violation("leibniz", None, m + n, f"Leibniz rule fails on M_{m} ⊗ M_{n}"))
        return bad

    def associativity_violations(self) -> List[Violation]:
        C = self.base.complex
        ring = self.ring
        bad = []
        degrees = self.base.degrees()
        for a in degrees:
            for b in degrees:
                for c in degrees:
                    left = self.product(a + b, c) @ kron(self.product(a, b), ExactMatrix.identity(ring, C.rank(c)))
                    right = self.product(a, b + c) @ kron(ExactMatrix.identity(ring, C.rank(a)), self.product(b, c))
                    if left != right:
                        bad.append(Violation("associativity", None, a + b + c,
                                             f"Product is not associative on M_{a} ⊗ M_{b} ⊗ M_{c}"))
        return bad

    def unit_violations(self) -> List[Violation]:
        if self.unit is None:
            return []
        C = self.base.complex
        bad = []
        for n in self.base.degrees():
            identity = ExactMatrix.identity(self.ring, C.rank(n))
            if self.product(0, n) @ kron(self.unit, identity) != identity:
                bad.append(Violation("unit", None, n, f"Unit does not act as identity from the left on M_{n}"))
            if self.product(n, 0) @ kron(identity, self.unit) != identity:
                bad.append(Violation("unit", None, n, f"Unit does not act as identity from the right on M_{n}"))
        return bad

    def multiplicativity_violations(self) -> List[Violation]:
        """F^i M_m · F^j M_n ⊆ F^{i+j} M_{m+n} on the weights where it can fail."""
        F = self.base
        first, last = F.first_breakpoint, F.last_breakpoint
        weights = {b - 1 for b in F.breakpoints} | {last}
        if F.tail_high == CONSTANT_TAIL:
            weights.add(2 * last - first + 2)
        bad = []
        for i in sorted(weights):
            for j in sorted(weights):
                for m, n in self._degree_pairs():
                    products = self.multiply(m, F.level(i, m), n, F.level(j, n))
                    if not contains(F.level(i + j, m + n), products):
                        bad.append(Violation(
                            "multiplicativity", i + j, m + n,
                            f"F^{i} M_{m} · F^{j} M_{n} is not contained in F^{i + j} M_{m + n}",
                        ))
        return bad

    def commutativity_violations(self) -> List[Violation]:
        """μ_{m,n} = (-1)^{mn} μ_{n,m} ∘ swap, checked only for commutative algebras."""
        if not self.commutative:
            return []
        C = self.base.complex
        bad = []
        for m, n in self._degree_pairs():
            rm, rn = C.rank(m), C.rank(n)
            swap = [[0] * (rm * rn) for _ in range(rn * rm)]
            for i in range(rm):
                for j in range(rn):
                    swap[j * rm + i][i * rn + j] = 1
            swapped = self.product(n, m) @ ExactMatrix(self.ring, swap, (rn * rm, rm * rn))
            if self.product(m, n) != swapped.scale(-1 if (m * n) % 2 else 1):
                bad.append(Violation("commutativity", None, m + n,
                                     f"Product is not graded-commutative on M_{m} ⊗ M_{n}"))
        return bad

    def validate(self) -> List[Violation]:
        violations = list(self.base.validate())
        violations.extend(self.leibniz_violations())
        violations.extend(self.associativity_violations())
        violations.extend(self.unit_violations())
        violations.extend(self.multiplicativity_violations())
        violations.extend(self.commutativity_violations())
        return violations

    def __repr__(self) -> str:
        return f"FilteredDGA({self.base!r}, products={sorted(self._products)}, commutative={self.commutative})"


def validate_dga(A: FilteredDGA) -> List[Violation]:
    return A.validate()
