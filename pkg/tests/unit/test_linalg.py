"""
Unit tests for exact linear algebra over the integers, the rationals and prime fields.
"""

import pytest
from fractions import Fraction
from hypothesis import given, settings, strategies as st

from src.exceptions import ShapeError
from src.linalg import (
    ExactMatrix,
    FgModule,
    Ring,
    contains,
    image_basis,
    intersect,
    invariant_factors,
    inverse,
    is_saturated,
    kernel_basis,
    rank,
    saturate,
    smith_normal_form,
    solve,
    span_equal,
    subquotient,
)

ZZ = Ring.integers()
QQ = Ring.rationals()
GF2 = Ring.prime_field(2)


def matrix(ring, rows):
    return ExactMatrix(ring, rows, (len(rows), len(rows[0]) if rows else 0))


small_matrices = st.integers(min_value=1, max_value=4).flatmap(
    lambda m: st.integers(min_value=1, max_value=4).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(min_value=-6, max_value=6), min_size=n, max_size=n),
            min_size=m, max_size=m,
        )
    )
)


def test_ring_parse_names():
    """Test short ring names."""
    assert Ring.parse("ZZ") == ZZ
    assert Ring.parse("QQ") == QQ
    assert Ring.parse("GF2") == GF2
    assert Ring.parse("GF(97)") == Ring.prime_field(97)
    assert Ring.parse("GF97").name == "GF97"

    with pytest.raises(ValueError):
        Ring.parse("GF4")
    with pytest.raises(ValueError):
        Ring.parse("reals")


def test_ring_normalize():
    """Test canonical representatives."""
    assert ZZ.normalize(-3) == -3
    assert GF2.normalize(3) == 1
    assert Ring.prime_field(97).normalize("1/2") == 49
    assert QQ.normalize("3/6") == Fraction(1, 2)

    with pytest.raises(ValueError):
        ZZ.normalize("1/2")
    with pytest.raises(ValueError):
        GF2.normalize("1/2")


def test_matrix_shape_is_checked():
    with pytest.raises(ShapeError):
        ExactMatrix(ZZ, [[1, 2], [3]], (2, 2))


def test_smith_normal_form_integers():
    """Test the Smith normal form of a 2x2 integer matrix."""
    A = matrix(ZZ, [[2, 4], [6, 8]])
    U, D, V = smith_normal_form(A)

    assert U @ A @ V == D
    assert invariant_factors(A) == [2, 4]
    assert D == matrix(ZZ, [[2, 0], [0, 4]])


def test_rank_depends_on_the_ring():
    A = [[1, 1], [1, 1]]
    assert rank(matrix(ZZ, A)) == 1
    assert rank(matrix(GF2, [[2, 0], [0, 2]])) == 0
    assert rank(matrix(QQ, [[2, 0], [0, 2]])) == 2


def test_kernel_and_image():
    """Test kernel and image bases of a rank one map."""
    A = matrix(ZZ, [[1, 1, 0]])
    K = kernel_basis(A)

    assert K.cols == 2
    assert (A @ K).is_zero()
    assert is_saturated(K)
    assert span_equal(image_basis(A), matrix(ZZ, [[1]]))


def test_span_containment_over_integers():
    """Test that containment respects divisibility over the integers."""
    two, four, one = matrix(ZZ, [[2]]), matrix(ZZ, [[4]]), matrix(ZZ, [[1]])

    assert contains(two, four)
    assert not contains(two, one)
    assert contains(one, two)
    assert contains(matrix(QQ, [[2]]), matrix(QQ, [[1]]))


def test_saturation():
    A = matrix(ZZ, [[2], [4]])

    assert not is_saturated(A)
    assert span_equal(saturate(A), matrix(ZZ, [[1], [2]]))


def test_intersection_of_lattices():
    """2Z ∩ 3Z = 6Z."""
    assert span_equal(intersect(matrix(ZZ, [[2]]), matrix(ZZ, [[3]])), matrix(ZZ, [[6]]))


def test_solve():
    A = matrix(ZZ, [[2, 0], [0, 3]])

    X = solve(A, matrix(ZZ, [[4], [9]]))
    assert X == matrix(ZZ, [[2], [3]])
    assert solve(A, matrix(ZZ, [[1], [0]])) is None


def test_inverse_of_unimodular_matrix():
    P = matrix(ZZ, [[1, 2], [0, 1]])
    assert inverse(P) == matrix(ZZ, [[1, -2], [0, 1]])
    assert P @ inverse(P) == ExactMatrix.identity(ZZ, 2)


def test_fg_module_summary():
    """Test human readable module summaries."""
    assert FgModule(ZZ, 2, (2,)).summary() == "Z^2 ⊕ Z/2"
    assert FgModule.zero(ZZ).summary() == "0"
    assert FgModule.free(GF2, 1).summary() == "F_2"
    assert FgModule.zero(ZZ).is_zero


def test_fg_module_invariants_are_checked():
    with pytest.raises(ValueError):
        FgModule(ZZ, 0, (2, 3))
    with pytest.raises(ValueError):
        FgModule(GF2, 0, (2,))


def test_direct_sum_combines_torsion():
    """Z/2 ⊕ Z/3 ≅ Z/6."""
    total = FgModule.direct_sum(ZZ, [FgModule.from_cyclic(ZZ, 2), FgModule.from_cyclic(ZZ, 3)])
    assert total == FgModule(ZZ, 0, (6,))


def test_subquotient():
    """Test (N + D) / D for N = Z and D = 2Z."""
    module = subquotient(1, matrix(ZZ, [[1]]), matrix(ZZ, [[2]]))
    assert module == FgModule(ZZ, 0, (2,))

    free = subquotient(2, ExactMatrix.identity(ZZ, 2), matrix(ZZ, [[1], [0]]))
    assert free == FgModule.free(ZZ, 1)


@settings(max_examples=40, deadline=None)
@given(small_matrices)
def test_smith_decomposition_properties(rows):
    """U·A·V = D with a divisibility chain on the diagonal."""
    A = matrix(ZZ, rows)
    U, D, V = smith_normal_form(A)

    assert U @ A @ V == D
    factors = invariant_factors(A)
    assert all(d > 0 for d in factors)
    assert all(b % a == 0 for a, b in zip(factors, factors[1:]))
    assert len(factors) == rank(A.convert(QQ))


@settings(max_examples=40, deadline=None)
@given(small_matrices, st.sampled_from(["ZZ", "QQ", "GF2", "GF97"]))
def test_kernel_basis_properties(rows, ring_name):
    """Kernel columns are annihilated and rank-nullity holds."""
    A = matrix(Ring.parse(ring_name), rows)
    K = kernel_basis(A)

    assert (A @ K).is_zero()
    assert K.cols + rank(A) == A.cols
    assert rank(K) == K.cols
