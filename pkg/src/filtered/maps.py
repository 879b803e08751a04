"""Maps of filtered complexes."""

import logging
from typing import Dict, List, Mapping

from .filtration import FilteredComplex, Violation
from ..exceptions import RingMismatchError, ShapeError
from ..linalg import ExactMatrix, contains

logger = logging.getLogger(__name__)


class FilteredMap:
    """A chain map f: source → target with f(F^s) ⊆ F^s.

    Args:
        source: Domain filtered complex
        target: Codomain filtered complex
        components: Map degree n → matrix of f_n (rank target_n × rank source_n);
            missing degrees are zero

    Raises:
        RingMismatchError: If the complexes or components disagree on the ring
        ShapeError: If a component has the wrong shape
    """

    def __init__(self, source: FilteredComplex, target: FilteredComplex,
                 components: Mapping[int, ExactMatrix]):
        if source.ring != target.ring:
            raise RingMismatchError(f"Map from {source.ring} to {target.ring}")
        self.source = source
        self.target = target
        self._components: Dict[int, ExactMatrix] = {}
        for n, matrix in components.items():
            expected = (target.complex.rank(n), source.complex.rank(n))
            if matrix.shape != expected:
                raise ShapeError(f"f_{n} has shape {matrix.shape}, expected {expected}")
            self._components[int(n)] = matrix

    def component(self, n: int) -> ExactMatrix:
        matrix = self._components.get(n)
        if matrix is None:
            return ExactMatrix.zeros(self.source.ring, self.target.complex.rank(n), self.source.complex.rank(n))
        return matrix

    def degrees(self) -> List[int]:
        return sorted(set(self.source.degrees()) | set(self.target.degrees()))

    def with_source_and_target(self, source: FilteredComplex, target: FilteredComplex) -> "FilteredMap":
        """Same components between refiltered copies of the same complexes."""
        return FilteredMap(source, target, self._components)

    def validate(self) -> List[Violation]:
        violations = []
        for n in self.degrees():
            left = self.target.differential(n) @ self.component(n)
            right = self.component(n - 1) @ self.source.differential(n)
            if left != right:
                violations.append(Violation("map", None, n, f"f does not commute with d in degree {n}"))
        weights = sorted(set(self.source.breakpoints) | set(self.target.breakpoints))
        for s in weights:
            for n in self.degrees():
                image = self.component(n) @ self.source.level(s, n)
                if not contains(self.target.level(s, n), image):
                    violations.append(
                        Violation("map", s, n, f"f(F^{s} M_{n}) is not contained in F^{s} N_{n}")
                    )
        return violations


def validate_map(f: FilteredMap) -> List[Violation]:
    return f.validate()


def identity_map(F: FilteredComplex) -> FilteredMap:
    return FilteredMap(F, F, {n: ExactMatrix.identity(F.ring, F.complex.rank(n)) for n in F.degrees()})
