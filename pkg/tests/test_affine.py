"""Tests for point sets, staircases and the evaluation-matrix basis builder."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import random_affine
from pointideals import (
    DEGLEX,
    LEX,
    Polynomial,
    Staircase,
    affine_certify,
    affine_points,
    buchberger_moeller,
    canonical_element,
    evaluate,
    poly_str,
    projective_points,
    staircase_of,
)

# ---------------------------------------------------------------------------
# point-set construction


def test_affine_points_validates_length():
    with pytest.raises(ValueError):
        affine_points(2, [[1, 2, 3]])


def test_duplicate_points_rejected_with_both_indices():
    with pytest.raises(ValueError) as exc:
        affine_points(1, [[1], [2], [1]])
    assert "0" in str(exc.value) and "2" in str(exc.value)


def test_projective_normalization():
    ps = projective_points(1, [[2, 0], [3, 6]])
    assert ps.points == ((Fraction(1), Fraction(0)), (Fraction(1), Fraction(2)))


def test_projective_zero_vector_rejected():
    with pytest.raises(ValueError):
        projective_points(1, [[0, 0]])


def test_projective_duplicates_detected_after_scaling():
    with pytest.raises(ValueError):
        projective_points(1, [[1, 2], [2, 4]])


# ---------------------------------------------------------------------------
# staircases


def test_staircase_membership_and_counts():
    stair = Staircase(2, ((1, 2), (3, 0)))
    assert stair.contains((1, 2))
    assert stair.contains((2, 5))
    assert not stair.contains((0, 7))
    assert stair.membership((0, 0)) == "in_D"
    assert stair.membership((3, 1)) == "in_C"
    # degree 3: (0,3) and (2,1) avoid both corner cones, (1,2) and (3,0) don't
    assert stair.standard_count(3) == 2


def test_standard_monomials_finite_and_infinite():
    finite = Staircase(2, ((2, 0), (0, 2)))
    assert sorted(finite.standard_monomials()) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    with pytest.raises(ValueError):
        Staircase(2, ((1, 2),)).standard_monomials()


def test_staircase_of_rejects_zero_ideal():
    from pointideals.poly import GroebnerBasis

    with pytest.raises(ValueError):
        staircase_of(GroebnerBasis(DEGLEX, ()))


# ---------------------------------------------------------------------------
# vanishing-ideal bases


def test_single_point_basis():
    gb, stair, std = buchberger_moeller(affine_points(2, [[3, 5]]), LEX)
    assert [poly_str(g, LEX, 2) for g in gb.elements] == ["X2 - 3", "X3 - 5"]
    assert std == [(0, 0)]


def test_empty_point_set_gives_unit_ideal():
    gb, stair, std = buchberger_moeller(affine_points(2, []), LEX)
    assert gb.is_unit()
    assert std == []
    assert stair.corners == ((0, 0),)


def test_parabola_lex_basis():
    pts = affine_points(2, [[0, 0], [1, 1], [2, 4]])
    gb, stair, std = buchberger_moeller(pts, LEX)
    # elements are sorted by increasing leading exponent; X1^3 precedes X2 in lex
    assert [poly_str(g, LEX, 1) for g in gb.elements] == [
        "X1^3 - 3*X1^2 + 2*X1",
        "X2 - X1^2",
    ]
    assert std == [(0, 0), (1, 0), (2, 0)]
    assert stair.corners == ((0, 1), (3, 0))


def test_parabola_deglex_basis_differs():
    pts = affine_points(2, [[0, 0], [1, 1], [2, 4]])
    gb, stair, std = buchberger_moeller(pts, DEGLEX)
    assert len(std) == 3
    assert sorted(std) == [(0, 0), (0, 1), (1, 0)]


def test_basis_vanishes_and_certifies():
    pts = affine_points(2, [[1, 2], [Fraction(1, 2), 0], [-3, 1], [0, 0]])
    for order in (LEX, DEGLEX):
        gb, stair, std = buchberger_moeller(pts, order)
        for g in gb.elements:
            for p in pts.points:
                assert evaluate(g, p) == 0
        assert len(std) == 4
        assert affine_certify(gb, pts).passed


def test_requires_affine_mode():
    with pytest.raises(ValueError):
        buchberger_moeller(projective_points(1, [[1, 1]]), LEX)


# ---------------------------------------------------------------------------
# canonical elements


def test_canonical_element_tail_is_standard():
    pts = affine_points(2, [[0, 0], [1, 1], [2, 4]])
    gb, stair, _ = buchberger_moeller(pts, LEX)
    f = canonical_element((1, 1), gb)
    assert f.leading(LEX)[0] == (1, 1)
    assert all(e == (1, 1) or not stair.contains(e) for e in f.terms)
    for p in pts.points:
        assert evaluate(f, p) == 0


def test_canonical_element_rejects_standard_exponent():
    gb, _, _ = buchberger_moeller(affine_points(1, [[0], [1]]), LEX)
    with pytest.raises(ValueError):
        canonical_element((0,), gb)


# ---------------------------------------------------------------------------
# randomized count law (small-scale; the acceptance suite runs it at volume)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(1, 3), st.integers(1, 5))
def test_standard_count_equals_point_count(seed, n, s):
    rng = random.Random(seed)
    pts = random_affine(rng, n, s)
    for order in (LEX, DEGLEX):
        gb, stair, std = buchberger_moeller(pts, order)
        assert len(std) == s
        assert len(stair.standard_monomials()) == s
