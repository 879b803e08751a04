"""Maps induced on pages by filtered maps."""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from .classical import er_classical
from .page import Page, Position
from ..filtered import FilteredMap
from ..linalg import ExactMatrix

logger = logging.getLogger(__name__)


@dataclass
class InducedPageMap:
    source: Page
    target: Page
    matrices: Dict[Position, ExactMatrix] = field(default_factory=dict)

    def matrix(self, s: int, t: int) -> ExactMatrix:
        found = self.matrices.get((s, t))
        if found is None:
            return ExactMatrix.zeros(self.source.ring, self.target.term(s, t).subquotient.num_generators,
                                     self.source.term(s, t).subquotient.num_generators)
        return found

    def commutation_failures(self) -> List[Position]:
        """Positions where E^r(f) does not commute with d^r."""
        bad = []
        for pos in self.source.positions():
            after = self.target.differential(*pos) @ self.matrix(*pos)
            before = self.matrix(*self.source.target(*pos)) @ self.source.differential(*pos)
            end = self.target.term(*self.target.target(*pos)).subquotient
            if not end.reduce(after - before).is_zero():
                bad.append(pos)
        return bad


def induced_page_map(f: FilteredMap, r: int, source: Optional[Page] = None,
                     target: Optional[Page] = None) -> InducedPageMap:
    """E^r(f) on generators, using classical pages unless pages are supplied.

    Raises:
        ValueError: If f sends a numerator outside the target numerator
    """
    source = source or er_classical(f.source, r)
    target = target or er_classical(f.target, r)
    result = InducedPageMap(source, target)
    positions = set(source.positions()) | set(target.positions())
    for s, t in sorted(positions):
        term = source.term(s, t)
        image_term = target.term(s, t)
        if term.subquotient.num_generators == 0 or image_term.subquotient.num_generators == 0:
            continue
        images = f.component(term.n) @ term.subquotient.generator_lift
        result.matrices[(s, t)] = image_term.coordinates(images)
    return result
