"""
Seeded random instances for the verification campaign.

A random filtered complex is built from basis weights: the columns of d_n
are random combinations of a basis of ker d_{n-1} ∩ F^w M_{n-1}, where w is
the weight of the source basis vector, so d∘d = 0 and d(F^w) ⊆ F^w hold by
construction. A random unimodular change of basis in every degree then hides
the coordinate structure of the steps. Candidates are redrawn until they
validate.

Instance 0 of every theorem is a worked fixture, so a deliberately broken
check is caught even on a one-instance run. Among the random instances,
every index ≡ 1 (mod 4) has a constant tail, and over the integers every
index ≡ 2 (mod 4) has its steps above the first breakpoint doubled, which
leaves them unsaturated.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

import numpy as np

from ..ahss import BUILTIN_CW, CWComplex, builtin_coefficients, builtin_cw, real_projective_plane
from ..complexes import ChainComplex
from ..filtered import CONSTANT_TAIL, ZERO_TAIL, FilteredComplex, filtration_from_weights
from ..linalg import ExactMatrix, Ring, intersect, inverse, kernel_basis, kron
from ..multiplicative import FilteredDGA, exterior_dga, koszul_dga

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GeneratorSettings:
    """Size limits of random instances."""
    max_degrees: int = 5
    max_rank: int = 4
    max_weight_span: int = 5
    max_entry: int = 3
    max_shear: int = 1
    max_attempts: int = 20


class GenerationError(RuntimeError):
    """No valid candidate was drawn within the attempt limit."""


def instance_rng(seed: int, index: int) -> np.random.Generator:
    """Independent stream per (seed, index), so instances do not depend on scheduling."""
    return np.random.default_rng([seed, index])


def toy_d2(ring: Ring = None) -> FilteredComplex:
    """M_1 = ⟨a⟩, M_0 = ⟨b⟩, d a = b, with a in weight 0 and b in weight 2.

    Its only nonzero differential is d^2: E^2_{0,1} → E^2_{-2,2}, an isomorphism.
    """
    ring = ring or Ring.integers()
    C = ChainComplex(ring, {0: 1, 1: 1}, {1: ExactMatrix(ring, [[1]], (1, 1))})
    return filtration_from_weights(C, {1: [0], 0: [2]})


def _random_unimodular(rng: np.random.Generator, ring: Ring, n: int, settings: GeneratorSettings) -> ExactMatrix:
    """L·U with unit lower and upper triangular factors, so the determinant is 1."""
    bound = settings.max_shear
    lower = [[1 if i == j else (int(rng.integers(-bound, bound + 1)) if i > j else 0) for j in range(n)]
             for i in range(n)]
    upper = [[1 if i == j else (int(rng.integers(-bound, bound + 1)) if i < j else 0) for j in range(n)]
             for i in range(n)]
    return ExactMatrix(ring, lower, (n, n)) @ ExactMatrix(ring, upper, (n, n))


def _random_vector(rng: np.random.Generator, size: int, settings: GeneratorSettings) -> List[int]:
    return [int(v) for v in rng.integers(-settings.max_entry, settings.max_entry + 1, size=size)]


def _draw_filtered_complex(rng: np.random.Generator, ring: Ring, settings: GeneratorSettings,
                           tail: str, unsaturated: bool) -> FilteredComplex:
    n_degrees = int(rng.integers(1, settings.max_degrees + 1))
    bottom = int(rng.integers(-1, 1))
    degrees = list(range(bottom, bottom + n_degrees))
    ranks = {n: int(rng.integers(0, settings.max_rank + 1)) for n in degrees}
    span = int(rng.integers(0, settings.max_weight_span + 1))
    weights = {n: sorted(int(w) for w in rng.integers(0, span + 1, size=ranks[n])) for n in degrees}

    differentials: Dict[int, ExactMatrix] = {}
    for n in degrees[1:]:
        below = ranks[n - 1]
        if below == 0 or ranks[n] == 0:
            continue
        previous = differentials.get(n - 1)
        cycles = kernel_basis(previous) if previous is not None else ExactMatrix.identity(ring, below)
        columns = []
        for w in weights[n]:
            allowed = [j for j, v in enumerate(weights[n - 1]) if v >= w]
            level = ExactMatrix.identity(ring, below).select_columns(allowed)
            basis = intersect(cycles, level)
            if basis.cols == 0 or rng.random() < 0.25:
                columns.append([0] * below)
                continue
            coeffs = ExactMatrix(ring, [[c] for c in _random_vector(rng, basis.cols, settings)], (basis.cols, 1))
            columns.append((basis @ coeffs).column(0))
        differentials[n] = ExactMatrix.from_columns(ring, below, columns)

    C = ChainComplex(ring, ranks, differentials)
    F = filtration_from_weights(C, weights, tail)
    if unsaturated:
        F = double_above(F, F.first_breakpoint)
    return change_basis(F, {n: _random_unimodular(rng, ring, ranks[n], settings) for n in degrees if ranks[n]})


def random_filtered_complex(rng: np.random.Generator, ring: Ring,
                            settings: GeneratorSettings = GeneratorSettings(),
                            tail: str = ZERO_TAIL, unsaturated: bool = False) -> FilteredComplex:
    """A valid random bounded filtered complex over ``ring``.

    Args:
        rng: Random stream
        ring: Coefficient ring
        settings: Size limits
        tail: Behavior above the last breakpoint (``zero`` or ``constant``)
        unsaturated: Double the steps above the first breakpoint; integers only

    Raises:
        GenerationError: If no candidate validates within ``settings.max_attempts``
    """
    if unsaturated and ring.is_field:
        raise ValueError(f"Unsaturated steps need the integers, got {ring.name}")
    for attempt in range(settings.max_attempts):
        F = _draw_filtered_complex(rng, ring, settings, tail, unsaturated)
        violations = F.validate()
        if not violations:
            return F
        logger.debug(f"Rejected candidate {attempt}: {violations[0]}")
    raise GenerationError(f"No valid filtered complex in {settings.max_attempts} attempts")


def double_above(F: FilteredComplex, b: int) -> FilteredComplex:
    """F'^s = 2·F^s for s > b and F^s otherwise; d-compatibility and nesting are kept."""
    steps = {(c, n): F.step(c, n).scale(2) if c > b else F.step(c, n)
             for c in F.breakpoints for n in F.degrees()}
    return FilteredComplex(F.complex, F.breakpoints, steps, F.tail_high, allow_unsaturated=True)


def change_basis(F: FilteredComplex, bases: Dict[int, ExactMatrix]) -> FilteredComplex:
    """Rewrite F in new bases: column j of ``bases[n]`` is the new j-th basis vector of M_n."""
    C = F.complex
    inverses = {n: inverse(P) for n, P in bases.items()}

    def to_new(n: int, matrix: ExactMatrix) -> ExactMatrix:
        return inverses[n] @ matrix if n in inverses else matrix

    differentials = {}
    for n, d in C.differentials.items():
        source = bases.get(n)
        differentials[n] = to_new(n - 1, d @ source if source is not None else d)
    complex_ = ChainComplex(C.ring, C.ranks, differentials)
    steps = {(b, n): to_new(n, F.step(b, n)) for b in F.breakpoints for n in F.degrees()}
    return FilteredComplex(complex_, F.breakpoints, steps, F.tail_high, F.allow_unsaturated)


def change_dga_basis(A: FilteredDGA, bases: Dict[int, ExactMatrix]) -> FilteredDGA:
    """Rewrite A in new bases; μ_{m,n} becomes P_{m+n}^{-1} μ_{m,n} (P_m ⊗ P_n)."""
    ring = A.ring
    ranks = A.base.complex.ranks

    def basis(n: int) -> ExactMatrix:
        return bases[n] if n in bases else ExactMatrix.identity(ring, ranks.get(n, 0))

    products = {}
    for (m, n), mu in A.products.items():
        products[(m, n)] = inverse(basis(m + n)) @ mu @ kron(basis(m), basis(n))
    unit = None
    if A.unit is not None:
        unit = (inverse(basis(0)) @ A.unit).column(0)
    return FilteredDGA(change_basis(A.base, bases), products, unit, A.commutative)


def random_dga(rng: np.random.Generator, ring: Ring,
               settings: GeneratorSettings = GeneratorSettings()) -> FilteredDGA:
    """Z[x]/(x^{N+1}) ⊗ Λ(e_1, e_2) with random d e_i = c_i x^{a_i}, weights and bases.

    Products e_1 e_2 = -e_2 e_1 land in degree 2, so the Koszul signs of odd
    classes are exercised.
    """
    N = int(rng.integers(2, 4))
    weight_x = int(rng.integers(0, 3))
    exponents = [int(a) for a in rng.integers(1, 3, size=2)]
    coefficients = [int(c) for c in rng.integers(0, 3, size=2)]
    weights_e = [int(rng.integers(0, a * weight_x + 1)) if c else int(rng.integers(0, 3))
                 for a, c in zip(exponents, coefficients)]
    A = exterior_dga(N, exponents, coefficients, weight_x=weight_x, weights_e=weights_e, ring=ring)
    ranks = A.base.complex.ranks
    bases = {n: _random_unimodular(rng, ring, rank, settings) for n, rank in ranks.items() if rank}
    return change_dga_basis(A, bases)


def filtered_instance(seed: int, index: int, ring: Ring,
                      settings: GeneratorSettings = GeneratorSettings()) -> FilteredComplex:
    if index == 0:
        return toy_d2(ring)
    tail = CONSTANT_TAIL if index % 4 == 1 else ZERO_TAIL
    unsaturated = index % 4 == 2 and not ring.is_field
    return random_filtered_complex(instance_rng(seed, index), ring, settings, tail, unsaturated)


def dga_instance(seed: int, index: int, ring: Ring) -> FilteredDGA:
    if index == 0:
        return koszul_dga(2, ring)
    return random_dga(instance_rng(seed, index), ring)


COEFFICIENT_CHOICES = ("Z", "Z+Z[-2]")


def cw_instance(seed: int, index: int, ring: Ring) -> Tuple[CWComplex, ChainComplex]:
    """A standard CW complex with one of the standard coefficient complexes."""
    if index == 0:
        return real_projective_plane(), builtin_coefficients("Z", ring)
    rng = instance_rng(seed, index)
    names = sorted(BUILTIN_CW)
    X = builtin_cw(names[int(rng.integers(0, len(names)))])
    M = builtin_coefficients(COEFFICIENT_CHOICES[int(rng.integers(0, len(COEFFICIENT_CHOICES)))], ring)
    return X, M
