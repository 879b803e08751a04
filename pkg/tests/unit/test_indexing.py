"""
Unit tests for indexing conventions and relabelings.
"""

import pytest
from hypothesis import given, strategies as st

from src.indexing import (
    IDENTITY,
    INTERNAL,
    Convention,
    all_conventions,
    compose,
    determinant,
    inverse,
    page_shift_transform,
    weight_and_degree,
)

coordinates = st.integers(min_value=-50, max_value=50)


def test_twelve_distinct_conventions():
    conventions = all_conventions()
    assert len(conventions) == 12
    assert len({c.name for c in conventions}) == 12


def test_default_convention_is_internal():
    assert INTERNAL.name == "serre-homology-decreasing"
    assert INTERNAL.to_internal(3, -1) == (3, -1)
    assert INTERNAL.differential_bidegree(2) == (-2, 1)


@pytest.mark.parametrize("name,r,bidegree", [
    ("serre-homology-decreasing", 3, (-3, 2)),
    ("serre-cohomology-decreasing", 2, (2, -1)),
    ("serre-cohomology-increasing", 2, (2, -1)),
    ("adams-homology-decreasing", 2, (-1, 2)),
    ("adams-cohomology-decreasing", 3, (1, -3)),
])
def test_differential_bidegrees(name, r, bidegree):
    assert Convention.parse(name).differential_bidegree(r) == bidegree


def test_parse_rejects_unknown_names():
    assert Convention.parse(" Adams-Homology-Decreasing ").name == "adams-homology-decreasing"
    for name in ("serre-homology", "leray-homology-decreasing", "serre-homology-sideways"):
        with pytest.raises(ValueError):
            Convention.parse(name)


def test_e2_scheme_labels_pages_one_later():
    e2 = Convention.parse("e2-homology-decreasing")
    assert e2.page_label(1) == 2
    assert INTERNAL.page_label(1) == 1


def test_abutment_position():
    assert INTERNAL.abutment_position(1, 3) == (-1, 4)
    increasing = Convention.parse("serre-homology-increasing")
    assert increasing.abutment_position(1, 3) == (1, 2)


@given(coordinates, coordinates)
def test_round_trip_through_internal_labels(s, t):
    for convention in all_conventions():
        assert convention.from_internal(*convention.to_internal(s, t)) == (s, t)
        assert convention.to_internal(*convention.from_internal(s, t)) == (s, t)


@given(st.integers(min_value=1, max_value=20))
def test_page_shift_transform_is_unimodular(r):
    forward, backward = page_shift_transform(r)
    assert determinant(forward) == 1
    assert compose(forward, backward) == IDENTITY
    assert inverse(forward) == backward


def test_page_shift_at_one():
    forward, _ = page_shift_transform(1)
    assert forward == ((0, -1), (1, 2))
    with pytest.raises(ValueError):
        page_shift_transform(0)


def test_inverse_requires_unimodular_matrix():
    with pytest.raises(ValueError):
        inverse(((2, 0), (0, 1)))


def test_weight_and_degree():
    assert weight_and_degree(1, 2, 3) == (3, -2)
    assert weight_and_degree(2, 2, 3) == (8, 3)
    with pytest.raises(ValueError):
        weight_and_degree(0, 0, 0)


@pytest.mark.parametrize("r", range(1, 6))
@pytest.mark.parametrize("s", range(-10, 11))
def test_weight_plus_degree_has_the_parity_of_total_degree(r, s):
    for t in range(-10, 11):
        w, deg = weight_and_degree(r, s, t)
        assert (w + deg) % 2 == (s + t) % 2, (r, s, t)
