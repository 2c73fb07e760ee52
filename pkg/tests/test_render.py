"""Tests for the staircase text renderer."""

import pytest

from pointideals import Staircase
from pointideals.render import RenderError, render_staircase


def test_single_corner_grid():
    picture = render_staircase(Staircase(2, ((1, 2),)))
    lines = picture.splitlines()
    # rows are printed top-down: y = 3, 2, 1, 0
    assert lines[1].startswith(" 3 | . #")
    assert " 2 | . B" in picture  # corner marked at (1, 2)
    assert lines[3].endswith(">") and lines[4].endswith(">")  # free rows 1 and 0
    assert "axes total: 3" in picture


def test_zero_ideal_everything_standard():
    picture = render_staircase(Staircase(2, ()))
    assert "#" not in picture and "B" not in picture
    assert "axes total: 2" in picture


def test_unit_ideal_nothing_standard():
    picture = render_staircase(Staircase(2, ((0, 0),)))
    assert "." not in picture.split("rows:")[0]
    assert "axes total: 0" in picture


def test_arity_three_prints_levels():
    picture = render_staircase(Staircase(3, ((0, 0, 1), (1, 1, 0))))
    assert "X3 = 0" in picture and "X3 = 1" in picture
    assert "axes along X1" in picture


def test_variable_naming_offset():
    picture = render_staircase(Staircase(2, ((1, 1),)), first_var=2)
    assert "X2" in picture and "X3" in picture


def test_arity_four_unsupported():
    with pytest.raises(RenderError):
        render_staircase(Staircase(4, ((1, 0, 0, 0),)))
