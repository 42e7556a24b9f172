"""Unit tests for configuration, rationals, schemas and worker pools."""

from fractions import Fraction

import pytest
from pydantic import ValidationError

from src.models.schemas import CyclePacking, DensityParams, dump_json
from src.utils.config import Config
from src.utils.parallel import first_hit, ordered_map
from src.utils.rationals import (
    ceil_fraction,
    format_rational,
    parse_rational,
    rational_sqrt,
    sign_sqrt_minus,
    sign_sqrt_sum_minus,
    sqrt_enclosure,
)


def square(x):
    return x * x


def even_or_none(x):
    return x if x % 2 == 0 else None


class TestConfig:
    """Test cases for Config.validate."""

    def test_defaults_are_valid(self):
        assert Config.validate()

    def test_non_positive_cap(self, mocker):
        mocker.patch.object(Config, "EXACT_PARTITION_CAP", 0)
        with pytest.raises(ValueError, match="EXACT_PARTITION_CAP"):
            Config.validate()


class TestRationals:
    """Test cases for the exact rational helpers."""

    @pytest.mark.parametrize("text, expected", [
        ("3/22", Fraction(3, 22)),
        (" 7 ", Fraction(7)),
        ("0.25", Fraction(1, 4)),
        (5, Fraction(5)),
    ])
    def test_parse(self, text, expected):
        assert parse_rational(text) == expected

    @pytest.mark.parametrize("bad", ["x", "1/0", True, 1.5])
    def test_parse_rejects(self, bad):
        with pytest.raises(ValueError):
            parse_rational(bad)

    def test_format(self):
        assert format_rational(Fraction(4, 2)) == "2"
        assert format_rational(Fraction(-3, 22)) == "-3/22"

    def test_sqrt(self):
        assert rational_sqrt(Fraction(9, 16)) == Fraction(3, 4)
        assert rational_sqrt(Fraction(2)) is None
        lo, hi = sqrt_enclosure(Fraction(2), 1000)
        assert lo * lo <= 2 <= hi * hi
        assert hi - lo == Fraction(1, 1000)

    @pytest.mark.parametrize("x, t, expected", [(4, 2, 0), (2, 1, 1), (2, 2, -1), (0, -1, 1)])
    def test_sign_sqrt_minus(self, x, t, expected):
        assert sign_sqrt_minus(Fraction(x), Fraction(t)) == expected

    @pytest.mark.parametrize("x, y, t, expected", [
        (1, 4, 3, 0),
        (1, 4, 4, -1),
        (2, 2, 2, 1),
        (0, 0, 0, 0),
        (Fraction(625, 1936), Fraction(64, 121), Fraction(57, 44), 0),
    ])
    def test_sign_sqrt_sum_minus(self, x, y, t, expected):
        assert sign_sqrt_sum_minus(Fraction(x), Fraction(y), Fraction(t)) == expected

    def test_ceil(self):
        assert ceil_fraction(Fraction(7, 2)) == 4
        assert ceil_fraction(Fraction(-7, 2)) == -3
        assert ceil_fraction(Fraction(3)) == 3


class TestSchemas:
    """Test cases for the witness models."""

    def test_rationals_round_trip_as_strings(self):
        params = DensityParams(r=3, alpha="3/22", beta="3/11", gamma="4/11", delta="4/11")
        assert params.alpha == Fraction(3, 22)
        assert '"alpha": "3/22"' in dump_json(params)

    def test_rejects_bad_r(self):
        with pytest.raises(ValidationError):
            DensityParams(r=0, alpha=1, beta=1, gamma=1, delta=1)

    def test_frozen(self):
        packing = CyclePacking(hub=0, cycles=[[0, 1, 0]])
        with pytest.raises(ValidationError):
            packing.hub = 1

    def test_sorted_keys(self):
        assert dump_json(CyclePacking(hub=2)) == '{"cycles": [], "hub": 2, "size": 0}'


class TestParallel:
    """Test cases for the ordered worker-pool helpers."""

    @pytest.mark.parametrize("jobs", [1, 2])
    def test_ordered_map(self, jobs):
        assert ordered_map(square, [3, 1, 2], jobs) == [9, 1, 4]

    @pytest.mark.parametrize("jobs", [1, 3])
    def test_first_hit(self, jobs):
        assert first_hit(even_or_none, [1, 3, 4, 6], jobs) == 4
        assert first_hit(even_or_none, [1, 3], jobs) is None
