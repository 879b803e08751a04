"""
Pages of the spectral sequence of a filtered complex.

Every term E^r_{s,t} is kept as a numerator/denominator pair of spans in
M_n (n = s + t, filtration weight p = -s), so classes, differentials and
comparisons are all computed on chain-level representatives.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from ..filtered import FilteredComplex
from ..linalg import ExactMatrix, FgModule, Subquotient, restricted_preimage, span_sum

logger = logging.getLogger(__name__)

Position = Tuple[int, int]
SpanBuilder = Callable[[int, int], Tuple[ExactMatrix, ExactMatrix]]


@dataclass
class PageTerm:
    """E^r_{s,t} as span(numerator) / span(denominator) inside M_{s+t}."""
    s: int
    t: int
    subquotient: Subquotient

    @property
    def position(self) -> Position:
        return self.s, self.t

    @property
    def n(self) -> int:
        return self.s + self.t

    @property
    def weight(self) -> int:
        return -self.s

    @property
    def numerator(self) -> ExactMatrix:
        return self.subquotient.numerator

    @property
    def denominator(self) -> ExactMatrix:
        return self.subquotient.denominator

    @property
    def iso(self) -> FgModule:
        return self.subquotient.module

    @property
    def is_zero(self) -> bool:
        return self.iso.is_zero

    def coordinates(self, x: ExactMatrix) -> ExactMatrix:
        return self.subquotient.coordinates(x)

    def lift(self, coords: ExactMatrix) -> ExactMatrix:
        return self.subquotient.lift(coords)


class Page:
    """The page E^r with differential d^r of bidegree (-r, r-1).

    Args:
        filtered: The filtered complex the page belongs to
        r: Page index (for E^∞ the stabilization index)
        method: Name of the construction (``classical``, ``lurie``)
        spans: Builder (weight p, degree n) → (numerator, denominator)
        infinite: Mark the page as E^∞
    """

    def __init__(self, filtered: FilteredComplex, r: int, method: str, spans: SpanBuilder,
                 infinite: bool = False):
        if r < 1:
            raise ValueError(f"Page index must be >= 1, got {r}")
        self.filtered = filtered
        self.r = r
        self.method = method
        self.infinite = infinite
        self._spans = spans
        self._terms: Dict[Position, PageTerm] = {}
        self._differentials: Dict[Position, ExactMatrix] = {}
        for p in filtered.weights():
            for n in filtered.degrees():
                self.term(-p, n + p)
        logger.debug(f"Built {self.label} page ({method}) with {len(self.support())} nonzero terms")

    @property
    def label(self) -> str:
        return "E^inf" if self.infinite else f"E^{self.r}"

    @property
    def ring(self):
        return self.filtered.ring

    def in_rectangle(self, s: int, t: int) -> bool:
        return -s in self.filtered.weights() and (s + t) in self.filtered.complex.ranks

    def positions(self) -> List[Position]:
        """All positions of the support rectangle."""
        return sorted((-p, n + p) for p in self.filtered.weights() for n in self.filtered.degrees())

    def support(self) -> List[Position]:
        return [pos for pos in self.positions() if not self.term(*pos).is_zero]

    def __iter__(self) -> Iterator[PageTerm]:
        for pos in self.positions():
            yield self.term(*pos)

    def term(self, s: int, t: int) -> PageTerm:
        key = (s, t)
        term = self._terms.get(key)
        if term is None:
            n = s + t
            rank = self.filtered.complex.rank(n)
            numerator, denominator = self._spans(-s, n)
            term = PageTerm(s, t, Subquotient(self.ring, rank, numerator, denominator))
            self._terms[key] = term
        return term

    def target(self, s: int, t: int) -> Position:
        return s - self.r, t + self.r - 1

    def source(self, s: int, t: int) -> Position:
        """Position whose differential lands at (s, t)."""
        return s + self.r, t - self.r + 1

    def differential(self, s: int, t: int) -> ExactMatrix:
        """Matrix of d^r_{s,t} on the chosen generators (target rows, source columns)."""
        key = (s, t)
        matrix = self._differentials.get(key)
        if matrix is None:
            source = self.term(s, t)
            target = self.term(*self.target(s, t))
            if source.subquotient.num_generators == 0 or target.subquotient.num_generators == 0:
                matrix = ExactMatrix.zeros(self.ring, target.subquotient.num_generators,
                                           source.subquotient.num_generators)
            else:
                d = self.filtered.differential(source.n)
                matrix = target.coordinates(d @ source.subquotient.generator_lift)
            self._differentials[key] = matrix
        return matrix

    def kernel_span(self, s: int, t: int) -> ExactMatrix:
        """Representatives x in the numerator whose class d^r[x] vanishes."""
        source = self.term(s, t)
        target = self.term(*self.target(s, t))
        return restricted_preimage(source.numerator, self.filtered.differential(source.n), target.denominator)

    def image_span(self, s: int, t: int) -> ExactMatrix:
        """d applied to the numerator at (s, t), a span in the target's ambient module."""
        source = self.term(s, t)
        return self.filtered.differential(source.n) @ source.numerator

    def kernel(self, s: int, t: int) -> FgModule:
        source = self.term(s, t)
        return Subquotient(self.ring, source.subquotient.ambient_rank,
                           self.kernel_span(s, t), source.denominator).module

    def image(self, s: int, t: int) -> FgModule:
        target = self.term(*self.target(s, t))
        return Subquotient(self.ring, target.subquotient.ambient_rank,
                           self.image_span(s, t), target.denominator).module

    def homology_spans(self, s: int, t: int) -> Tuple[ExactMatrix, ExactMatrix]:
        """(ker d^r + denominator, im d^r + denominator) at (s, t), in M_{s+t}."""
        term = self.term(s, t)
        numerator = span_sum(self.kernel_span(s, t), term.denominator)
        incoming = self.image_span(*self.source(s, t))
        denominator = span_sum(incoming, term.denominator)
        return numerator, denominator

    def homology(self, s: int, t: int) -> FgModule:
        """H(E^r, d^r) at (s, t)."""
        numerator, denominator = self.homology_spans(s, t)
        return Subquotient(self.ring, self.filtered.complex.rank(s + t), numerator, denominator).module

    def dd_violations(self) -> List[Position]:
        """Positions where d^r∘d^r is nonzero."""
        bad = []
        for pos in self.support():
            middle = self.target(*pos)
            end = self.term(*self.target(*middle))
            composite = self.differential(*middle) @ self.differential(*pos)
            if not end.subquotient.reduce(composite).is_zero():
                bad.append(pos)
        return bad

    def is_degenerate(self) -> bool:
        """Whether every differential on this page vanishes."""
        return all(self.differential(*pos).is_zero() for pos in self.support())

    def __repr__(self) -> str:
        return f"Page({self.label}, method={self.method}, support={self.support()})"
