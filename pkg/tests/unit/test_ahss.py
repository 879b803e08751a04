"""
Unit tests for the Atiyah-Hirzebruch spectral sequence and the skeletal/Whitehead comparison.
"""

import pytest

from src.ahss import (
    BUILTIN_COEFFICIENTS,
    BUILTIN_CW,
    builtin_coefficients,
    builtin_cw,
    cellular_cohomology,
    integers_in_degree,
    maunder_compare,
    real_projective_plane,
    skeletal_filtration,
    whitehead_filtration_coeff,
)
from src.linalg import FgModule, Ring
from src.pages import er_classical

ZZ = Ring.integers()
GF2 = Ring.prime_field(2)


def test_builtin_spaces():
    assert sorted(BUILTIN_CW) == ["CP2", "RP2", "S1", "S2", "T2", "point"]
    assert builtin_cw("T2").homology(1) == FgModule.free(ZZ, 2)
    assert builtin_cw("CP2").dimension == 4
    with pytest.raises(KeyError):
        builtin_cw("Klein")
    with pytest.raises(KeyError):
        builtin_coefficients("Q/Z")


def test_cellular_cohomology_of_rp2():
    """H^*(RP²; Z) = Z, 0, Z/2 and H^*(RP²; F_2) = F_2 in every degree."""
    X = real_projective_plane()

    integral = cellular_cohomology(X, FgModule.free(ZZ, 1))
    assert integral == {0: FgModule.free(ZZ, 1), 1: FgModule.zero(ZZ), 2: FgModule(ZZ, 0, (2,))}

    mod2 = cellular_cohomology(X, FgModule.free(GF2, 1))
    assert all(mod2[s] == FgModule.free(GF2, 1) for s in range(3))


def test_skeletal_e2_of_rp2(rp2_with_integers):
    X, M = rp2_with_integers
    page = er_classical(skeletal_filtration(X, M), 2)

    assert page.term(0, 0).iso == FgModule.free(ZZ, 1)
    assert page.term(-1, 0).is_zero
    assert page.term(-2, 0).iso == FgModule(ZZ, 0, (2,))


def test_filtrations_are_valid(rp2_with_integers):
    X, M = rp2_with_integers
    assert skeletal_filtration(X, M).validate() == []
    assert whitehead_filtration_coeff(X, M).validate() == []


@pytest.mark.parametrize("space", sorted(BUILTIN_CW))
@pytest.mark.parametrize("coefficients", sorted(BUILTIN_COEFFICIENTS))
def test_skeletal_and_whitehead_agree(space, coefficients):
    report = maunder_compare(builtin_cw(space), builtin_coefficients(coefficients), r_max=4)
    assert report.ok, report.failures


def test_comparison_over_a_field(rp2_with_integers):
    X, _ = rp2_with_integers
    report = maunder_compare(X, integers_in_degree(0, GF2), r_max=3)

    assert report.ok, report.failures
    assert report.e2_terms == {(0, 0): "F_2", (-1, 0): "F_2", (-2, 0): "F_2"}


def test_comparison_without_relabeling_fails(rp2_with_integers):
    X, M = rp2_with_integers
    report = maunder_compare(X, M, r_max=3, mutate=True)

    assert not report.ok
    assert report.checks["page_shift"]
    assert report.to_dict()["ok"] is False


def test_report_lists_e2_terms(rp2_with_integers):
    X, M = rp2_with_integers
    data = maunder_compare(X, M, r_max=2).to_dict()

    assert data["space"] == "RP2"
    assert data["e2"] == [
        {"s": -2, "t": 0, "module": "Z/2"},
        {"s": 0, "t": 0, "module": "Z"},
    ]
