"""
Finitely generated modules and subquotients of free modules.

``FgModule`` compares by isomorphism class (free rank plus invariant
factors); element-level data rides along in ``generator_lift`` and
``presentation`` and is ignored by equality. ``Subquotient`` is the working
object behind every page term: it keeps the spans it was built from and can
express any numerator element in the chosen generators.
"""

import math
import logging
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

from .matrix import ExactMatrix
from .normal_forms import decompose, inverse, kernel_basis, solve
from .rings import Ring, Scalar
from ..exceptions import ShapeError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FgModule:
    """Isomorphism data of a finitely generated module.

    Args:
        ring: Coefficient ring
        free_rank: Rank of the free part
        invariant_factors: Torsion coefficients d_1 | d_2 | ... (always empty over fields)
        presentation: Optional (number of generators, relation matrix)
        generator_lift: Optional matrix whose columns represent the generators,
            torsion generators first
    """
    ring: Ring
    free_rank: int = 0
    invariant_factors: Tuple[Scalar, ...] = ()
    presentation: Optional[Tuple[int, ExactMatrix]] = field(default=None, compare=False, repr=False)
    generator_lift: Optional[ExactMatrix] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        factors = tuple(self.invariant_factors)
        object.__setattr__(self, "invariant_factors", factors)
        if self.free_rank < 0:
            raise ValueError(f"Negative free rank {self.free_rank}")
        if self.ring.is_field and factors:
            raise ValueError("Modules over a field have no invariant factors")
        for d in factors:
            if d == 0 or self.ring.is_unit(d) or d < 0:
                raise ValueError(f"Invalid invariant factor {d}")
        for a, b in zip(factors, factors[1:]):
            if b % a != 0:
                raise ValueError(f"Invariant factors {factors} do not form a divisibility chain")

    @classmethod
    def zero(cls, ring: Ring) -> "FgModule":
        return cls(ring, 0, ())

    @classmethod
    def free(cls, ring: Ring, n: int) -> "FgModule":
        return cls(ring, n, ())

    @classmethod
    def from_cyclic(cls, ring: Ring, d: Scalar) -> "FgModule":
        """The cyclic module R/(d); d = 0 gives R."""
        if d == 0:
            return cls.free(ring, 1)
        if ring.is_unit(d) or ring.is_field:
            return cls.zero(ring)
        return cls(ring, 0, (abs(d),))

    @classmethod
    def from_relations(cls, ring: Ring, generators: int, relations: ExactMatrix) -> "FgModule":
        """R^generators modulo the column span of ``relations``."""
        if relations.rows != generators:
            raise ShapeError(f"Relations have {relations.rows} rows for {generators} generators")
        result = decompose(relations)
        torsion = tuple(d for d in result.diagonal if d != 0 and not ring.is_unit(d))
        return cls(ring, generators - result.rank, torsion, presentation=(generators, relations))

    @classmethod
    def direct_sum(cls, ring: Ring, modules: Iterable["FgModule"]) -> "FgModule":
        free = 0
        cyclic: List[Scalar] = []
        for module in modules:
            free += module.free_rank
            cyclic.extend(module.invariant_factors)
        if not cyclic:
            return cls.free(ring, free)
        relations = ExactMatrix.diagonal(ring, cyclic)
        torsion = cls.from_relations(ring, len(cyclic), relations)
        return cls(ring, free, torsion.invariant_factors)

    @property
    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    @property
    def num_generators(self) -> int:
        return self.free_rank + len(self.invariant_factors)

    def is_isomorphic(self, other: "FgModule") -> bool:
        return self == other

    def summary(self, separator: str = " ⊕ ") -> str:
        """Human readable form such as ``Z^2 ⊕ Z/2``."""
        if self.is_zero:
            return "0"
        parts = []
        symbol = self.ring.symbol
        if self.free_rank == 1:
            parts.append(symbol)
        elif self.free_rank > 1:
            parts.append(f"{symbol}^{self.free_rank}")
        parts.extend(f"{symbol}/{d}" for d in self.invariant_factors)
        return separator.join(parts)

    def to_dict(self) -> dict:
        return {"rank": self.free_rank, "invariant_factors": [int(d) for d in self.invariant_factors]}

    def __str__(self) -> str:
        return self.summary()


class Subquotient:
    """(span N + span D) / span D inside the free module of rank ``ambient_rank``.

    span(D) ⊆ span(N) is not required; the result is N / (N ∩ D) up to
    isomorphism. Generators are listed torsion first, then free.
    """

    def __init__(self, ring: Ring, ambient_rank: int, numerator: ExactMatrix, denominator: ExactMatrix):
        for name, matrix in (("numerator", numerator), ("denominator", denominator)):
            if matrix.rows != ambient_rank:
                raise ShapeError(
                    f"{name} columns have length {matrix.rows}, ambient rank is {ambient_rank}"
                )
        self.ring = ring
        self.ambient_rank = ambient_rank
        self.numerator = numerator
        self.denominator = denominator

        c = numerator.cols
        combined = numerator.hstack(denominator)
        relations_full = kernel_basis(combined)
        # λ with Nλ ∈ span D
        self.relations = relations_full.block(0, c, 0, relations_full.cols)
        result = decompose(self.relations)
        self._U = result.U
        self._U_inv = inverse(result.U)
        self._combined = combined

        diagonal = list(result.diagonal)
        torsion_idx = [i for i, d in enumerate(diagonal) if d != 0 and not ring.is_unit(d)]
        free_idx = list(range(result.rank, c))
        self._keep = torsion_idx + free_idx
        self._moduli = [diagonal[i] for i in torsion_idx] + [0] * len(free_idx)

        lift = numerator @ self._U_inv.select_columns(self._keep) if c else \
            ExactMatrix.zeros(ring, ambient_rank, 0)
        self.generator_lift = lift
        self.module = FgModule(
            ring,
            len(free_idx),
            tuple(diagonal[i] for i in torsion_idx),
            presentation=(c, self.relations),
            generator_lift=lift,
        )

    @property
    def num_generators(self) -> int:
        return len(self._keep)

    @property
    def moduli(self) -> List[Scalar]:
        """Order of each generator: an invariant factor, or 0 for free generators."""
        return list(self._moduli)

    def contains(self, x: ExactMatrix) -> bool:
        """Whether every column of x lies in span N + span D."""
        if x.cols == 0:
            return True
        return solve(self._combined, x) is not None

    def coordinates(self, x: ExactMatrix) -> ExactMatrix:
        """Coordinates of the classes of the columns of x in the generators.

        Raises:
            ValueError: If some column is not in span N + span D
        """
        if x.rows != self.ambient_rank:
            raise ShapeError(f"Vector of length {x.rows} in ambient of rank {self.ambient_rank}")
        k = x.cols
        if self.num_generators == 0 or k == 0:
            if k and solve(self._combined, x) is None:
                raise ValueError("Element is not in the numerator span")
            return ExactMatrix.zeros(self.ring, self.num_generators, k)
        mixed = solve(self._combined, x)
        if mixed is None:
            raise ValueError("Element is not in the numerator span")
        c = self.numerator.cols
        y = self._U @ mixed.block(0, c, 0, k)
        rows = []
        for idx, modulus in zip(self._keep, self._moduli):
            rows.append([self.ring.reduce_mod(y.entry(idx, j), modulus) for j in range(k)])
        return ExactMatrix(self.ring, rows, (self.num_generators, k))

    def reduce(self, coords: ExactMatrix) -> ExactMatrix:
        """Canonical form of coordinate columns (torsion entries reduced)."""
        rows = []
        for i, modulus in enumerate(self._moduli):
            rows.append([self.ring.reduce_mod(coords.entry(i, j), modulus) for j in range(coords.cols)])
        return ExactMatrix(self.ring, rows, coords.shape)

    def is_zero_class(self, x: ExactMatrix) -> bool:
        return self.coordinates(x).is_zero()

    def lift(self, coords: ExactMatrix) -> ExactMatrix:
        """Representatives in the ambient module for coordinate columns."""
        return self.generator_lift @ coords


def subquotient(ambient_rank: int, N: ExactMatrix, D: ExactMatrix) -> FgModule:
    """Isomorphism class of (span N + span D) / span D with a generator lift.

    Raises:
        ShapeError: If column lengths do not match ``ambient_rank``
    """
    return Subquotient(N.ring, ambient_rank, N, D).module


def gcd(a: int, b: int) -> int:
    return math.gcd(int(a), int(b))
