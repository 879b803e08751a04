"""
Unit tests for Deligne's décalage and the page-shift comparison.
"""

import pytest

from src.ahss import real_projective_plane
from src.campaign import instance_rng, random_filtered_complex
from src.decalage import (
    cohomological_decalage_level,
    comparison_map_e1_to_e2,
    comparison_naturality,
    decalage_iterate,
    decalage_level,
    decalage_stage,
    deligne_decalage,
    iterated_comparison,
    secondary_filtration,
    truncation_graded_check,
    truncation_window,
)
from src.complexes import ChainComplex, from_cochain, hom_complex
from src.filtered import identity_map, stupid_filtration
from src.indexing import page_shift_transform
from src.linalg import ExactMatrix, Ring, span_equal
from src.pages import compare_pages, e1_page, er_classical

ZZ = Ring.integers()


def test_decalage_moves_the_toy_differential_to_e1(toy):
    """In Dec the class a drops to weight 1, so d^2 becomes d^1."""
    dec = deligne_decalage(toy)

    assert dec.validate() == []
    assert span_equal(dec.level(1, 1), ExactMatrix.identity(ZZ, 1))
    assert dec.level(2, 1).cols == 0

    e1 = e1_page(dec)
    assert e1.support() == [(-2, 2), (-1, 2)]
    assert not e1.differential(-1, 2).is_zero()


@pytest.mark.parametrize("r", [1, 2, 3])
def test_decalage_pages_match_shifted_pages(toy, r):
    """E^r(Dec F)[T(b)] ≅ E^{r+1}(F)[b] for T(s, t) = (-t, s + 2t)."""
    T, _ = page_shift_transform(1)
    report = compare_pages(er_classical(deligne_decalage(toy), r), er_classical(toy, r + 1), T)
    assert report.ok, report.describe()


def test_unshifted_comparison_fails(toy):
    T, _ = page_shift_transform(1)
    report = compare_pages(er_classical(deligne_decalage(toy), 2), er_classical(toy, 2), T)
    assert not report.ok


@pytest.mark.parametrize("index", range(5))
def test_decalage_on_random_instances(any_ring, index):
    F = random_filtered_complex(instance_rng(3, index), any_ring)
    dec = deligne_decalage(F)
    T, _ = page_shift_transform(1)

    assert dec.validate() == []
    for r in (1, 2):
        report = compare_pages(er_classical(dec, r), er_classical(F, r + 1), T)
        assert report.ok, report.describe()


@pytest.mark.parametrize("r", [1, 2])
def test_iterated_comparison(toy, r):
    report = iterated_comparison(toy, r)
    assert report.ok, report.describe()


def test_iterate_zero_is_identity(toy):
    assert decalage_iterate(toy, 0) is toy
    assert decalage_iterate(toy, 2).same_filtration(deligne_decalage(deligne_decalage(toy)))
    with pytest.raises(ValueError):
        decalage_iterate(toy, -1)


def test_comparison_map_is_an_isomorphism(toy):
    report = comparison_map_e1_to_e2(toy)

    assert report.ok, report.failures
    certificate = report.certificates[(0, 1)]
    assert certificate.dec_position == (-1, 2)
    assert certificate.matrix.to_rows() in ([[1]], [[-1]])


def test_comparison_map_on_random_instances():
    for index in range(4):
        F = random_filtered_complex(instance_rng(8, index), ZZ)
        assert comparison_map_e1_to_e2(F).ok


def test_comparison_map_is_natural(toy):
    assert comparison_naturality(identity_map(toy)) == []


def test_secondary_filtration_gradeds_are_truncations(toy):
    checked = 0
    for s, w in truncation_window(toy):
        check = truncation_graded_check(toy, s, w, secondary_filtration(toy, s))
        assert check.ok, check.mismatches
        checked += 1
    assert checked > 0


def test_decalage_stage_is_a_subcomplex(toy):
    stage, inclusions = decalage_stage(toy, 1)

    assert stage.rank(1) == 1
    assert stage.rank(0) == 1
    assert span_equal(inclusions[1], decalage_level(toy, 1, 1))
    assert decalage_stage(toy, 3)[0].rank(1) == 0


def test_cohomological_levels_use_negated_degrees():
    """Cochain degree k is stored in chain degree -k."""
    d0 = ExactMatrix(ZZ, [[2]], (1, 1))
    C = from_cochain(ZZ, {0: 1, 1: 1}, {0: d0})
    F = stupid_filtration(C)

    for s in range(-1, 3):
        for k in (0, 1):
            assert cohomological_decalage_level(F, s, k) == decalage_level(F, s, -k)
    assert deligne_decalage(F).validate() == []


def test_decalage_of_skeletal_cochains():
    """The cellular cochains of RP² under the stupid filtration."""
    H = hom_complex(real_projective_plane().cellular_chains(), ChainComplex.concentrated(ZZ, 0))
    dec = deligne_decalage(stupid_filtration(H))
    T, _ = page_shift_transform(1)

    assert dec.validate() == []
    assert compare_pages(er_classical(dec, 1), er_classical(stupid_filtration(H), 2), T).ok
