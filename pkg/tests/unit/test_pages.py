"""
Unit tests for the pages of a filtered complex.
"""

import pytest

from src.ahss import real_projective_plane
from src.campaign import random_filtered_complex, instance_rng
from src.complexes import ChainComplex
from src.filtered import (
    CONSTANT_TAIL,
    filtration_from_weights,
    identity_map,
    padic_filtration,
    stupid_filtration,
    whitehead_filtration,
)
from src.linalg import ExactMatrix, FgModule, Ring
from src.pages import (
    boundedness_class,
    compare_pages,
    convergence_report,
    e1_page,
    einfty_page,
    er_classical,
    er_lurie,
    er_page,
    induced_page_map,
    page_turning_report,
)

ZZ = Ring.integers()


def test_toy_e1_and_e2_terms(toy):
    """a sits at (0, 1) and b at (-2, 2) on both E^1 and E^2."""
    for page in (e1_page(toy), er_classical(toy, 2)):
        assert page.support() == [(-2, 2), (0, 1)]
        assert page.term(0, 1).iso == FgModule.free(ZZ, 1)
        assert page.term(-2, 2).iso == FgModule.free(ZZ, 1)


def test_toy_d2_is_an_isomorphism(toy):
    e1 = e1_page(toy)
    assert e1.is_degenerate()

    e2 = er_classical(toy, 2)
    assert e2.target(0, 1) == (-2, 2)
    matrix = e2.differential(0, 1)
    assert matrix.to_rows() in ([[1]], [[-1]])
    assert e2.kernel(0, 1).is_zero
    assert e2.image(0, 1) == FgModule.free(ZZ, 1)


def test_toy_pages_after_d2_vanish(toy):
    assert er_classical(toy, 3).support() == []
    infinity = einfty_page(toy)
    assert infinity.infinite
    assert infinity.label == "E^inf"
    assert infinity.support() == []


def test_page_labels(toy):
    assert er_classical(toy, 3).label == "E^3"
    with pytest.raises(ValueError):
        er_classical(toy, 0)
    with pytest.raises(ValueError):
        er_page(toy, 2, method="spectral")


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_lurie_pages_match_classical(toy, r):
    report = compare_pages(er_lurie(toy, r), er_classical(toy, r))
    assert report.ok, report.describe()
    assert report.positions_checked > 0


@pytest.mark.parametrize("index", range(4))
def test_constructions_agree_on_random_instances(any_ring, index):
    F = random_filtered_complex(instance_rng(11, index), any_ring)
    for r in (1, 2, 3):
        report = compare_pages(er_page(F, r, "lurie"), er_page(F, r, "classical"))
        assert report.ok, report.describe()


@pytest.mark.parametrize("r", [1, 2, 3])
def test_page_turning(toy, r):
    assert page_turning_report(toy, r) == []


def test_page_turning_on_random_instances():
    for index in range(4):
        F = random_filtered_complex(instance_rng(5, index), ZZ)
        for r in (1, 2):
            assert page_turning_report(F, r) == []


def test_convergence_of_toy(toy):
    report = convergence_report(toy)
    assert report.applicable
    assert report.ok


def test_convergence_detects_torsion_extensions():
    """E^∞ of the Whitehead filtration of RP² has Z/2 at weight 1, degree 1."""
    F = whitehead_filtration(real_projective_plane().cellular_chains())
    infinity = einfty_page(F)

    assert infinity.term(-1, 2).iso == FgModule(ZZ, 0, (2,))
    assert convergence_report(F).ok


def test_convergence_against_the_wrong_page_fails(toy):
    report = convergence_report(toy, reference=er_classical(toy, 2))
    assert not report.ok


def test_padic_spectral_sequence_has_no_differentials():
    F = padic_filtration(3, 2)
    infinity = einfty_page(F)

    assert infinity.term(-1, 1).iso == FgModule(ZZ, 0, (3,))
    assert convergence_report(F).ok


def test_identity_induces_identity_on_pages(toy):
    induced = induced_page_map(identity_map(toy), 2)
    assert induced.commutation_failures() == []
    assert induced.matrix(0, 1).to_rows() == [[1]]


def test_boundedness_of_toy(toy):
    shape = boundedness_class(toy)

    assert shape.complete
    assert shape.second_quadrant
    assert not shape.first_quadrant
    assert shape.s_range == (-2, 0)
    assert shape.t_range == (1, 2)
    assert shape.upper_half_plane and shape.lower_half_plane
    assert shape.left_half_plane and shape.right_half_plane
    assert shape.column_bounded and shape.row_bounded


def test_boundedness_of_stupid_filtration():
    C = ChainComplex(ZZ, {0: 1, 1: 1, 2: 1}, {1: ExactMatrix(ZZ, [[2]], (1, 1))})
    shape = boundedness_class(stupid_filtration(C))

    assert shape.column_bounded
    assert shape.complete
    assert shape.exhaustive


def test_boundedness_of_empty_support():
    F = filtration_from_weights(ChainComplex(ZZ, {}), {})
    shape = boundedness_class(F)

    assert shape.s_range is None and shape.t_range is None
    assert shape.column_bounded and shape.row_bounded
    assert shape.first_quadrant and shape.third_quadrant


def test_boundedness_flags_on_random_instances():
    for index in range(4):
        shape = boundedness_class(random_filtered_complex(instance_rng(17, index), ZZ))
        assert shape.column_bounded == (shape.left_half_plane and shape.right_half_plane)
        assert shape.row_bounded == (shape.upper_half_plane and shape.lower_half_plane)
        if shape.s_range is not None:
            assert shape.s_range[0] <= shape.s_range[1]
            assert shape.t_range[0] <= shape.t_range[1]


def test_convergence_is_not_applicable_with_a_constant_tail():
    """d a = b with b in the constant tail: E^∞_{0,1} = Z although H_* = 0."""
    C = ChainComplex(ZZ, {0: 1, 1: 1}, {1: ExactMatrix(ZZ, [[1]], (1, 1))})
    F = filtration_from_weights(C, {1: [0], 0: [1]}, CONSTANT_TAIL)
    assert F.validate() == []
    assert einfty_page(F).term(0, 1).iso == FgModule(ZZ, 1, ())

    report = convergence_report(F)
    assert not report.applicable
    assert report.mismatches == []
    assert report.ok
