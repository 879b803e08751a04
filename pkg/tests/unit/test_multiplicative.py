"""
Unit tests for filtered DGAs and the Leibniz rule on pages.
"""

import pytest

from src.decalage import deligne_decalage
from src.filtered import filtration_from_weights
from src.linalg import ExactMatrix, Ring
from src.multiplicative import (
    check_leibniz,
    decalage_multiplicativity,
    exterior_dga,
    monomial_dga,
    page_product,
    product_well_defined,
    validate_dga,
)
from src.pages import e1_page, er_classical

ZZ = Ring.integers()


def test_koszul_algebra_is_valid(koszul):
    assert validate_dga(koszul) == []
    assert koszul.base.validate() == []


def test_koszul_e1_has_nonzero_d1(koszul):
    """d(x^k e) = x^{k+1} raises the weight by one."""
    page = e1_page(koszul.base)
    assert not page.differential(0, 1).is_zero()
    assert not page.differential(-1, 2).is_zero()


@pytest.mark.parametrize("r", [1, 2, 3])
def test_leibniz_holds_on_koszul_pages(koszul, r):
    report = check_leibniz(er_classical(koszul.base, r), koszul)
    assert report.ok, report.violations
    if r == 1:
        assert report.checked > 0


def test_dropping_the_second_leibniz_term_is_detected(koszul):
    """d^1(x·e) = x·d^1(e) = x², so the one-sided rule fails."""
    report = check_leibniz(e1_page(koszul.base), koszul, include_right_term=False)
    assert not report.ok


@pytest.mark.parametrize("ring_name", ["ZZ", "QQ", "GF2", "GF97"])
def test_leibniz_with_a_d2(ring_name):
    """d e = x² with x in weight 1 gives a d^2."""
    A = monomial_dga(3, a=2, weight_x=1, weight_e=0, ring=Ring.parse(ring_name))
    assert validate_dga(A) == []
    assert e1_page(A.base).is_degenerate()
    assert not er_classical(A.base, 2).is_degenerate()
    for r in (1, 2, 3):
        assert check_leibniz(er_classical(A.base, r), A).ok


def test_monomial_dga_rejects_weight_lowering_differential():
    with pytest.raises(ValueError):
        monomial_dga(2, a=1, weight_x=0, weight_e=1)


def test_exterior_generators_anticommute():
    """In M_1 = ⟨e_1, x e_1, e_2, x e_2⟩ and M_2 = ⟨e_1 e_2, x e_1 e_2⟩."""
    A = exterior_dga(1, [1, 1])
    mu = A.product(1, 1)

    assert mu.column(0 * 4 + 2) == [1, 0]
    assert mu.column(2 * 4 + 0) == [-1, 0]
    assert mu.column(0 * 4 + 0) == [0, 0]
    assert validate_dga(A) == []


def test_exterior_differential_follows_the_sign_rule():
    """d(e_1 e_2) = d(e_1) e_2 - e_1 d(e_2) = x e_2 - x e_1."""
    A = exterior_dga(1, [1, 1])
    d2 = A.base.complex.differential(2)

    assert d2.column(0) == [0, -1, 0, 1]


@pytest.mark.parametrize("ring_name", ["ZZ", "GF2"])
def test_leibniz_with_two_odd_generators(ring_name):
    A = exterior_dga(2, [1, 2], [1, 1], weight_x=1, weights_e=[1, 0], ring=Ring.parse(ring_name))

    assert validate_dga(A) == []
    assert not A.product(1, 1).is_zero()
    for r in (1, 2, 3):
        report = check_leibniz(er_classical(A.base, r), A)
        assert report.ok, report.violations
    assert decalage_multiplicativity(A, deligne_decalage(A.base)) == []


def test_exterior_dga_rejects_weight_lowering_differential():
    with pytest.raises(ValueError):
        exterior_dga(2, [1, 1], weight_x=1, weights_e=[0, 2])


def test_products_on_e1(koszul):
    page = e1_page(koszul.base)
    x = ExactMatrix(ZZ, [[1]], (1, 1))

    product = page_product(page, koszul, (-1, 1), (-1, 1), x, x)
    assert product.to_rows() in ([[1]], [[-1]])
    assert product_well_defined(page, koszul, (-1, 1), (0, 1))


def test_decalage_is_multiplicative(koszul):
    assert decalage_multiplicativity(koszul, deligne_decalage(koszul.base)) == []


def test_product_that_ignores_weights_is_reported(koszul):
    """With x² moved down to weight 1, x·x leaves F^2."""
    base = filtration_from_weights(koszul.base.complex, {0: [0, 1, 1], 1: [0, 1, 1]})
    assert base.validate() == []

    kinds = {v.kind for v in validate_dga(koszul.with_base(base))}
    assert kinds == {"multiplicativity"}
