"""
Unit tests for filtered complexes, standard filtrations and gradeds.
"""

import pytest

from src.ahss import real_projective_plane
from src.complexes import ChainComplex, truncation_spans
from src.decalage import deligne_decalage
from src.exceptions import InvalidFiltrationError
from src.filtered import (
    FilteredComplex,
    FilteredMap,
    constant_filtration,
    filtration_level,
    from_increasing,
    graded_homology,
    graded_module,
    identity_map,
    induced_homology_filtration,
    inserted_filtration,
    padic_filtration,
    validate_map,
    whitehead_filtration,
)
from src.linalg import ExactMatrix, FgModule, Ring, span_equal

ZZ = Ring.integers()


def test_toy_filtration_is_valid(toy):
    assert toy.validate() == []
    assert toy.breakpoints == (0, 1, 2, 3)
    assert toy.stabilization_index() == 4
    assert toy.is_complete


def test_toy_levels(toy):
    """a has weight 0, b has weight 2."""
    assert toy.level(-5, 1) == ExactMatrix.identity(ZZ, 1)
    assert filtration_level(toy, 1, 1).cols == 0
    assert span_equal(toy.level(1, 0), ExactMatrix.identity(ZZ, 1))
    assert toy.level(3, 0).cols == 0


def test_graded_homology_of_toy(toy):
    assert graded_homology(toy, 0, 1) == FgModule.free(ZZ, 1)
    assert graded_homology(toy, 2, 0) == FgModule.free(ZZ, 1)
    assert graded_homology(toy, 1, 0).is_zero


def test_compacted_drops_redundant_breakpoints(toy):
    compact = toy.compacted()

    assert compact.breakpoints == (0, 1, 3)
    assert compact.same_filtration(toy)


def test_nesting_violation_is_reported():
    C = ChainComplex.concentrated(ZZ, 0)
    steps = {(0, 0): ExactMatrix.zeros(ZZ, 1, 0), (1, 0): ExactMatrix.identity(ZZ, 1)}
    F = FilteredComplex(C, [0, 1], steps)

    kinds = {v.kind for v in F.validate()}
    assert "nesting" in kinds
    with pytest.raises(InvalidFiltrationError) as excinfo:
        F.require_valid()
    assert excinfo.value.violations


def test_unsaturated_step_is_reported():
    """2Z ⊂ Z is rejected over the integers unless explicitly allowed."""
    C = ChainComplex.concentrated(ZZ, 0)
    steps = {(0, 0): ExactMatrix(ZZ, [[2]], (1, 1))}

    strict = FilteredComplex(C, [0], steps)
    assert [v.kind for v in strict.validate()] == ["saturation"]

    relaxed = FilteredComplex(C, [0], steps, allow_unsaturated=True)
    assert relaxed.validate() == []


def test_padic_gradeds():
    """gr^s of the 2-adic filtration on Z is Z/2 until the last step."""
    F = padic_filtration(2, 3)

    assert F.validate() == []
    for s in range(3):
        assert graded_module(F, s, 0) == FgModule(ZZ, 0, (2,))
    assert graded_module(F, 3, 0) == FgModule.free(ZZ, 1)
    assert graded_module(F, -1, 0).is_zero


def test_constant_filtration_has_no_gradeds(two_torsion_complex):
    F = constant_filtration(two_torsion_complex)

    assert not F.is_complete
    for n in F.degrees():
        assert graded_module(F, 0, n).is_zero
    assert deligne_decalage(F).same_filtration(F)


def test_decalage_of_inserted_filtration_is_whitehead():
    """Dec(ins^0 C)^s = τ_{≥s} C."""
    C = real_projective_plane().cellular_chains()
    dec = deligne_decalage(inserted_filtration(C, 0))

    assert dec.validate() == []
    for s in range(-1, 4):
        spans = truncation_spans(C, s)
        for n in C.degrees():
            assert span_equal(dec.level(s, n), spans[n])
    assert dec.same_filtration(whitehead_filtration(C))


def test_from_increasing_reverses_indices():
    """F_0 = 0 and F_1 = M puts the class in gr_1 = gr^{-1}."""
    C = ChainComplex.concentrated(ZZ, 0)
    F = from_increasing(C, {(0, 0): ExactMatrix.zeros(ZZ, 1, 0), (1, 0): ExactMatrix.identity(ZZ, 1)})

    assert F.validate() == []
    assert graded_module(F, -1, 0) == FgModule.free(ZZ, 1)
    assert graded_module(F, 0, 0).is_zero


def test_identity_map_is_filtered(toy):
    assert validate_map(identity_map(toy)) == []


def test_map_that_lowers_filtration_is_rejected(toy):
    """The identity on M_1 with zero on M_0 does not commute with d."""
    f = FilteredMap(toy, toy, {1: ExactMatrix.identity(ZZ, 1)})
    kinds = {v.kind for v in validate_map(f)}
    assert kinds == {"map"}


def test_induced_filtration_on_homology():
    """The Whitehead filtration puts H_1(RP²) = Z/2 in weight 1."""
    C = real_projective_plane().cellular_chains()
    induced = induced_homology_filtration(whitehead_filtration(C), 1)

    assert induced.total == FgModule(ZZ, 0, (2,))
    assert induced.graded(1) == FgModule(ZZ, 0, (2,))
    assert induced.graded(0).is_zero
