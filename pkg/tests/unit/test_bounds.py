"""Unit tests for the closed-form bounds."""

from fractions import Fraction

import pytest
from hypothesis import given, settings

from src.bounds.theorems import propagate_upper_bounds, theorem_bounds
from src.cycles.packing import c_number
from src.digraph.core import is_regular
from src.utils.errors import PreconditionError

from tests.strategies import regular_digraphs


class TestTheoremBounds:
    """Test cases for theorem_bounds."""

    @pytest.mark.parametrize("r, c_lower, c_upper, capped, dtw_lower", [
        (1, 1, 7, 1, 0),
        (8, 2, 7, 7, 0),
        (16, 3, 14, 14, 0),
        (20, 3, 21, 20, 1),
        (22, 3, 21, 21, 1),
    ])
    def test_values(self, r, c_lower, c_upper, capped, dtw_lower):
        report = theorem_bounds(r)
        assert (report.c_lower, report.c_upper, report.c_upper_capped, report.dtw_lower) == (
            c_lower, c_upper, capped, dtw_lower
        )

    def test_limit_interval(self):
        assert theorem_bounds(5).limit_interval == (Fraction(3, 22), Fraction(7, 8))

    def test_serialises_rationals(self):
        dumped = theorem_bounds(5).model_dump(mode="json")
        assert dumped["limit_interval"] == ["3/22", "7/8"]

    def test_invalid_r(self):
        with pytest.raises(PreconditionError):
            theorem_bounds(0)


class TestPropagateUpperBounds:
    """Test cases for propagate_upper_bounds."""

    @pytest.mark.parametrize("known, n, expected", [
        ({8: 7}, 16, 14),
        ({8: 7}, 12, 12),
        ({8: 7}, 17, 17),
        ({8: 7, 4: 3}, 16, 12),
        ({}, 5, 5),
    ])
    def test_values(self, known, n, expected):
        assert propagate_upper_bounds(known, n) == expected

    @pytest.mark.parametrize("known, n", [({8: 7}, 0), ({0: 1}, 5), ({3: 0}, 5)])
    def test_invalid(self, known, n):
        with pytest.raises(PreconditionError):
            propagate_upper_bounds(known, n)

    def test_adding_bounds_never_raises_result(self):
        assert propagate_upper_bounds({8: 7, 4: 3}, 40) <= propagate_upper_bounds({8: 7}, 40)


class TestAgainstExactValues:
    """The closed-form bounds bracket exact values on random regular digraphs."""

    @pytest.mark.slow
    @settings(max_examples=20, deadline=None)
    @given(regular_digraphs(max_r=5, max_n=14))
    def test_c_between_bounds(self, D):
        r = is_regular(D)
        c, _ = c_number(D)
        assert theorem_bounds(r).c_lower <= c <= r
