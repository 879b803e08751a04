"""
Finite CW complexes through their cellular chain complexes, a few standard
examples, and cellular cohomology with coefficients by the universal
coefficient theorem.
"""

import logging
from math import gcd
from typing import Dict, Mapping, Optional

from ..complexes import ChainComplex
from ..exceptions import ShapeError
from ..linalg import ExactMatrix, FgModule, Ring

logger = logging.getLogger(__name__)


class CWComplex:
    """Cells per dimension with integer cellular boundary matrices.

    Args:
        cell_counts: Map dimension k → number of k-cells
        boundary: Map k → ∂_k (cells_{k-1} × cells_k, integer entries)
        name: Optional label used in reports

    Raises:
        ShapeError: If a boundary has the wrong shape
        InvalidComplexError: If ∂∘∂ ≠ 0
    """

    def __init__(self, cell_counts: Mapping[int, int], boundary: Optional[Mapping[int, ExactMatrix]] = None,
                 name: str = ""):
        self.name = name
        self.cell_counts = {int(k): int(c) for k, c in cell_counts.items() if int(c) > 0}
        if any(k < 0 for k in self.cell_counts):
            raise ShapeError("Cells must have nonnegative dimension")
        ring = Ring.integers()
        self._boundary = {}
        for k, matrix in (boundary or {}).items():
            self._boundary[int(k)] = matrix if matrix.ring == ring else matrix.convert(ring)
        self.chains = ChainComplex(ring, self.cell_counts, self._boundary)

    @property
    def dimension(self) -> int:
        return max(self.cell_counts) if self.cell_counts else -1

    def cells(self, k: int) -> int:
        return self.cell_counts.get(k, 0)

    def boundary(self, k: int) -> ExactMatrix:
        return self.chains.differential(k)

    def cellular_chains(self, ring: Ring = None) -> ChainComplex:
        """C_•(X; R)."""
        if ring is None or ring == self.chains.ring:
            return self.chains
        return self.chains.convert(ring)

    def homology(self, k: int) -> FgModule:
        """Integral cellular homology H_k(X)."""
        return self.chains.homology(k)

    def __repr__(self) -> str:
        return f"CWComplex({self.name or 'X'}, cells={self.cell_counts})"


def _integer(rows) -> ExactMatrix:
    return ExactMatrix(Ring.integers(), rows)


def point() -> CWComplex:
    return CWComplex({0: 1}, {}, "point")


def sphere(n: int) -> CWComplex:
    if n == 0:
        return CWComplex({0: 2}, {}, "S0")
    return CWComplex({0: 1, n: 1}, {}, f"S{n}")


def real_projective_plane() -> CWComplex:
    return CWComplex({0: 1, 1: 1, 2: 1}, {1: _integer([[0]]), 2: _integer([[2]])}, "RP2")


def torus() -> CWComplex:
    return CWComplex({0: 1, 1: 2, 2: 1}, {1: _integer([[0, 0]]), 2: _integer([[0], [0]])}, "T2")


def complex_projective_plane() -> CWComplex:
    return CWComplex({0: 1, 2: 1, 4: 1}, {}, "CP2")


BUILTIN_CW = {
    "point": point,
    "S1": lambda: sphere(1),
    "S2": lambda: sphere(2),
    "RP2": real_projective_plane,
    "T2": torus,
    "CP2": complex_projective_plane,
}


def builtin_cw(name: str) -> CWComplex:
    """Look up a standard CW complex by name.

    Raises:
        KeyError: If the name is unknown
    """
    try:
        return BUILTIN_CW[name]()
    except KeyError:
        raise KeyError(f"Unknown CW complex {name!r}; known: {', '.join(BUILTIN_CW)}") from None


def _field_torsion(d: int, ring: Ring) -> FgModule:
    """Hom(Z/d, K) ≅ Ext(Z/d, K) for a field K: K when char K divides d, else 0."""
    if ring.characteristic and d % ring.characteristic == 0:
        return FgModule.free(ring, 1)
    return FgModule.zero(ring)


def cyclic_hom(d: int, m: int, ring: Ring) -> FgModule:
    """Hom(Z/d, R/m), with d = 0 standing for Z and m = 0 for R itself."""
    if ring.is_field:
        return FgModule.free(ring, 1) if d == 0 else _field_torsion(d, ring)
    if d == 0:
        return FgModule.from_cyclic(ring, m)
    if m == 0:
        return FgModule.zero(ring)
    return FgModule.from_cyclic(ring, gcd(d, m))


def cyclic_ext(d: int, m: int, ring: Ring) -> FgModule:
    """Ext(Z/d, R/m); Ext(Z, -) vanishes."""
    if d == 0:
        return FgModule.zero(ring)
    if ring.is_field:
        return _field_torsion(d, ring)
    return FgModule.from_cyclic(ring, d if m == 0 else gcd(d, m))


def cellular_cohomology(X: CWComplex, coefficients: FgModule) -> Dict[int, FgModule]:
    """H^s(X; A) for every s, by the universal coefficient theorem.

    H^s(X; A) ≅ Hom(H_s X, A) ⊕ Ext(H_{s-1} X, A), where A is a finitely
    generated module over the integers or a field, given by its invariants.
    """
    ring = coefficients.ring
    summands = [0] * coefficients.free_rank + [int(m) for m in coefficients.invariant_factors]
    result = {}
    for s in range(0, X.dimension + 1):
        parts = []
        current = X.homology(s)
        previous = X.homology(s - 1)
        current_cyclic = [0] * current.free_rank + [int(d) for d in current.invariant_factors]
        previous_cyclic = [int(d) for d in previous.invariant_factors]
        for m in summands:
            parts.extend(cyclic_hom(d, m, ring) for d in current_cyclic)
            parts.extend(cyclic_ext(d, m, ring) for d in previous_cyclic)
        result[s] = FgModule.direct_sum(ring, parts)
    return result
