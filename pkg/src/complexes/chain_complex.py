"""
Bounded chain complexes of finitely generated free modules.

Degrees are homological; cohomological data is stored with negated degrees
(M^k is kept as M_{-k}).
"""

import logging
from typing import Dict, List, Mapping, Optional, Tuple

from ..exceptions import InvalidComplexError, RingMismatchError
from ..linalg import ExactMatrix, FgModule, Ring, Subquotient, image_basis, kernel_basis

logger = logging.getLogger(__name__)


class ChainComplex:
    """A chain complex M_• with differentials d_n: M_n → M_{n-1}.

    Args:
        ring: Coefficient ring
        ranks: Map degree → rank; missing degrees have rank 0
        differentials: Map degree n → matrix of d_n (rank(n-1) × rank(n))
        check: Verify shapes and d∘d = 0 on construction

    Raises:
        InvalidComplexError: If ``check`` is set and d∘d ≠ 0 or shapes disagree
    """

    def __init__(self, ring: Ring, ranks: Mapping[int, int],
                 differentials: Optional[Mapping[int, ExactMatrix]] = None, check: bool = True):
        self.ring = ring
        self._ranks: Dict[int, int] = {int(n): int(r) for n, r in ranks.items() if int(r) > 0}
        self._differentials: Dict[int, ExactMatrix] = {}
        for n, d in (differentials or {}).items():
            n = int(n)
            if d.ring != ring:
                raise RingMismatchError(f"Differential d_{n} is over {d.ring}, complex is over {ring}")
            expected = (self.rank(n - 1), self.rank(n))
            if d.shape != expected:
                raise InvalidComplexError(
                    f"d_{n} has shape {d.shape}, expected {expected}", degree=n
                )
            if d.rows and d.cols and not d.is_zero():
                self._differentials[n] = d
        if check:
            bad = self.dd_violations()
            if bad:
                raise InvalidComplexError(f"d∘d ≠ 0 at degree {bad[0]}", degree=bad[0])

    @classmethod
    def zero(cls, ring: Ring) -> "ChainComplex":
        return cls(ring, {}, {})

    @classmethod
    def concentrated(cls, ring: Ring, degree: int, rank: int = 1) -> "ChainComplex":
        """R^rank placed in a single degree."""
        return cls(ring, {degree: rank}, {})

    # -- structure ------------------------------------------------------

    def rank(self, n: int) -> int:
        return self._ranks.get(n, 0)

    @property
    def ranks(self) -> Dict[int, int]:
        return dict(self._ranks)

    def degrees(self) -> List[int]:
        return sorted(self._ranks)

    @property
    def degree_range(self) -> Optional[Tuple[int, int]]:
        """(n_min, n_max) of the nonzero terms, or None for the zero complex."""
        if not self._ranks:
            return None
        return min(self._ranks), max(self._ranks)

    def differential(self, n: int) -> ExactMatrix:
        d = self._differentials.get(n)
        if d is None:
            return ExactMatrix.zeros(self.ring, self.rank(n - 1), self.rank(n))
        return d

    @property
    def differentials(self) -> Dict[int, ExactMatrix]:
        return dict(self._differentials)

    def is_zero(self) -> bool:
        return not self._ranks

    def dd_violations(self) -> List[int]:
        """Degrees n where d_{n-1}∘d_n ≠ 0."""
        bad = []
        for n in sorted(self._differentials):
            if (n - 1) in self._differentials:
                if not (self._differentials[n - 1] @ self._differentials[n]).is_zero():
                    bad.append(n)
        return bad

    # -- homology -------------------------------------------------------

    def cycles(self, n: int) -> ExactMatrix:
        return kernel_basis(self.differential(n))

    def boundaries(self, n: int) -> ExactMatrix:
        return image_basis(self.differential(n + 1))

    def homology_subquotient(self, n: int) -> Subquotient:
        return Subquotient(self.ring, self.rank(n), self.cycles(n), self.boundaries(n))

    def homology(self, n: int) -> FgModule:
        """H_n = ker d_n / im d_{n+1}, with generator lifts into M_n."""
        return self.homology_subquotient(n).module

    def convert(self, ring: Ring) -> "ChainComplex":
        """Base change of the matrices (integer complexes to QQ or GF(p))."""
        return ChainComplex(ring, self._ranks, {n: d.convert(ring) for n, d in self._differentials.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, ChainComplex):
            return NotImplemented
        return (self.ring == other.ring and self._ranks == other._ranks
                and self._differentials == other._differentials)

    def __repr__(self) -> str:
        return f"ChainComplex({self.ring.name}, ranks={self._ranks})"


def homology(C: ChainComplex, n: int) -> FgModule:
    return C.homology(n)
