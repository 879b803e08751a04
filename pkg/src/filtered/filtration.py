"""
Bounded, strictly filtered chain complexes.

A filtration is stored by its breakpoints b_0 < ... < b_k and a step matrix
for every (breakpoint, degree). Evaluation follows the tail rules:

    F^s M_n = M_n                     for s < b_0
    F^s M_n = step(b_i, n)            for b_i <= s < b_{i+1}
    F^s M_n = step(b_k, n)            for s >= b_k

With ``tail_high == "zero"`` the last step is forced to be zero, appending
the breakpoint b_k + 1 when the given steps do not end at zero.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from ..complexes import ChainComplex
from ..exceptions import InvalidFiltrationError, RingMismatchError, ShapeError
from ..linalg import ExactMatrix, contains, is_saturated, span_equal

logger = logging.getLogger(__name__)

ZERO_TAIL = "zero"
CONSTANT_TAIL = "constant"
TAILS = (ZERO_TAIL, CONSTANT_TAIL)


@dataclass(frozen=True)
class Violation:
    """One failed filtration condition.

    Args:
        kind: ``nesting``, ``d_compatibility``, ``saturation``, ``dd`` or ``map``
        weight: Filtration weight where it fails (None when not weight-specific)
        degree: Chain degree where it fails
        message: Human readable description
    """
    kind: str
    weight: Optional[int]
    degree: Optional[int]
    message: str

    def to_dict(self) -> dict:
        return {"kind": self.kind, "weight": self.weight, "degree": self.degree, "message": self.message}

    def __str__(self) -> str:
        return self.message


class FilteredComplex:
    """A chain complex with a finite decreasing filtration by subcomplexes.

    Args:
        complex_: Underlying chain complex
        breakpoints: Weights at which the filtration may change
        steps: Map (breakpoint, degree) → matrix whose columns span F^b M_n;
            missing entries are the zero submodule
        tail_high: ``zero`` or ``constant``
        allow_unsaturated: Accept non-saturated steps over the integers

    Raises:
        InvalidFiltrationError: If no breakpoints are given or the tail is unknown
        ShapeError: If a step does not live in M_n
    """

    def __init__(self, complex_: ChainComplex, breakpoints: Iterable[int],
                 steps: Mapping[Tuple[int, int], ExactMatrix], tail_high: str = ZERO_TAIL,
                 allow_unsaturated: bool = False):
        points = sorted({int(b) for b in breakpoints})
        if not points:
            raise InvalidFiltrationError("A filtration needs at least one breakpoint")
        if tail_high not in TAILS:
            raise InvalidFiltrationError(f"Unknown tail {tail_high!r}, expected one of {TAILS}")
        self.complex = complex_
        self.ring = complex_.ring
        self.tail_high = tail_high
        self.allow_unsaturated = allow_unsaturated

        self._steps: Dict[Tuple[int, int], ExactMatrix] = {}
        for (b, n), matrix in steps.items():
            b, n = int(b), int(n)
            if b not in points:
                raise InvalidFiltrationError(f"Step at weight {b} is not a breakpoint")
            if matrix.ring != self.ring:
                raise RingMismatchError(f"Step ({b}, {n}) is over {matrix.ring}, complex is over {self.ring}")
            if matrix.rows != complex_.rank(n):
                raise ShapeError(f"Step ({b}, {n}) has {matrix.rows} rows, M_{n} has rank {complex_.rank(n)}")
            if complex_.rank(n) == 0:
                continue
            self._steps[(b, n)] = matrix

        if tail_high == ZERO_TAIL and any(
            (points[-1], n) in self._steps and not self._steps[(points[-1], n)].is_zero()
            for n in complex_.degrees()
        ):
            points.append(points[-1] + 1)
        self.breakpoints: Tuple[int, ...] = tuple(points)
        self._cache: Dict[Tuple[int, int], ExactMatrix] = {}

    # -- evaluation -----------------------------------------------------

    @property
    def first_breakpoint(self) -> int:
        return self.breakpoints[0]

    @property
    def last_breakpoint(self) -> int:
        return self.breakpoints[-1]

    @property
    def is_complete(self) -> bool:
        return self.tail_high == ZERO_TAIL

    def step(self, b: int, n: int) -> ExactMatrix:
        """The stored step at breakpoint b, exactly as given."""
        matrix = self._steps.get((b, n))
        if matrix is None:
            return ExactMatrix.zeros(self.ring, self.complex.rank(n), 0)
        return matrix

    def level(self, s: int, n: int) -> ExactMatrix:
        """F^s M_n as a spanning matrix."""
        key = (s, n)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        if s < self.breakpoints[0]:
            result = ExactMatrix.identity(self.ring, self.complex.rank(n))
        else:
            b = max(p for p in self.breakpoints if p <= s)
            result = self.step(b, n)
        self._cache[key] = result
        return result

    def weights(self) -> range:
        """Weights p where gr^p can be nonzero."""
        return range(self.breakpoints[0] - 1, self.breakpoints[-1])

    def degrees(self) -> List[int]:
        return self.complex.degrees()

    def differential(self, n: int) -> ExactMatrix:
        return self.complex.differential(n)

    def stabilization_index(self) -> int:
        return max(1, self.breakpoints[-1] - self.breakpoints[0] + 1)

    # -- checks ---------------------------------------------------------

    def validate(self) -> List[Violation]:
        """Report nesting, d-compatibility, saturation and d∘d violations."""
        violations: List[Violation] = []
        for n in self.complex.dd_violations():
            violations.append(Violation("dd", None, n, f"d∘d ≠ 0 at degree {n}"))
        for n in self.degrees():
            for prev, b in zip(self.breakpoints, self.breakpoints[1:]):
                if not contains(self.level(prev, n), self.level(b, n)):
                    violations.append(
                        Violation("nesting", b, n, f"F^{b} M_{n} is not contained in F^{prev} M_{n}")
                    )
            for b in self.breakpoints:
                image = self.differential(n) @ self.level(b, n)
                if not contains(self.level(b, n - 1), image):
                    violations.append(
                        Violation("d_compatibility", b, n, f"d(F^{b} M_{n}) is not contained in F^{b} M_{n - 1}")
                    )
                if not self.ring.is_field and not self.allow_unsaturated:
                    if not is_saturated(self.level(b, n)):
                        violations.append(
                            Violation("saturation", b, n, f"F^{b} M_{n} is not a saturated sublattice")
                        )
        if violations:
            logger.debug(f"Filtration has {len(violations)} violations")
        return violations

    def require_valid(self) -> "FilteredComplex":
        """Return self, raising when validation fails.

        Raises:
            InvalidFiltrationError: With the violation list attached
        """
        violations = self.validate()
        if violations:
            raise InvalidFiltrationError(
                f"Invalid filtration: {violations[0]} ({len(violations)} violations)", violations
            )
        return self

    # -- derived filtrations --------------------------------------------

    def compacted(self) -> "FilteredComplex":
        """Drop breakpoints whose steps equal the previous ones spanwise."""
        keep = [self.breakpoints[0]]
        for b in self.breakpoints[1:]:
            if not all(span_equal(self.level(keep[-1], n), self.level(b, n)) for n in self.degrees()):
                keep.append(b)
        steps = {(b, n): self.level(b, n) for b in keep for n in self.degrees()}
        return FilteredComplex(self.complex, keep, steps, self.tail_high, self.allow_unsaturated)

    def same_filtration(self, other: "FilteredComplex") -> bool:
        """Whether both filtrations agree spanwise at every weight."""
        if self.complex != other.complex or self.tail_high != other.tail_high:
            return False
        points = set(self.breakpoints) | set(other.breakpoints)
        weights = points | {min(points) - 1}
        return all(
            span_equal(self.level(s, n), other.level(s, n))
            for s in weights for n in self.degrees()
        )

    def convert(self, ring) -> "FilteredComplex":
        """Base change of complex and steps (e.g. an integer fixture read mod p)."""
        steps = {(b, n): self.step(b, n).convert(ring) for b in self.breakpoints for n in self.degrees()}
        return FilteredComplex(self.complex.convert(ring), self.breakpoints, steps,
                               self.tail_high, self.allow_unsaturated)

    def __repr__(self) -> str:
        return (f"FilteredComplex({self.ring.name}, ranks={self.complex.ranks}, "
                f"breakpoints={list(self.breakpoints)}, tail={self.tail_high})")


def validate(F: FilteredComplex) -> List[Violation]:
    return F.validate()


def filtration_level(F: FilteredComplex, s: int, n: int) -> ExactMatrix:
    return F.level(s, n)


def stabilization_index(F: FilteredComplex) -> int:
    """Page index r* from which every differential vanishes."""
    return F.stabilization_index()
