"""Exact rational helpers.

Every threshold in the density machinery is compared exactly. Square roots
never go through floating point: signs of expressions involving them are
decided by moving the root to one side and squaring.
"""

from fractions import Fraction
from math import isqrt
from typing import Optional, Tuple, Union

RationalLike = Union[Fraction, int, str]


def parse_rational(value: RationalLike) -> Fraction:
    """Parse a Fraction from an int, a Fraction or a "p/q" / "p" / "0.25" string."""
    if isinstance(value, bool):
        raise ValueError(f"Not a rational: {value!r}")
    if isinstance(value, (Fraction, int)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"Not a rational: {value!r}") from e
    raise ValueError(f"Not a rational: {value!r}")


def format_rational(value: Fraction) -> str:
    """Serialise as "p/q" ("p" for integers)."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def rational_sqrt(value: Fraction) -> Optional[Fraction]:
    """Exact square root when value is the square of a rational, else None."""
    value = Fraction(value)
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    root_num, root_den = isqrt(num), isqrt(den)
    if root_num * root_num == num and root_den * root_den == den:
        return Fraction(root_num, root_den)
    return None


def sqrt_enclosure(value: Fraction, scale: int) -> Tuple[Fraction, Fraction]:
    """Return (lo, hi) with lo <= sqrt(value) <= hi and hi - lo <= 1/scale."""
    value = Fraction(value)
    if value < 0:
        raise ValueError("square root of a negative rational")
    exact = rational_sqrt(value)
    if exact is not None:
        return exact, exact
    # floor(sqrt(floor(x))) == floor(sqrt(x)) for x >= 0
    scaled = (value.numerator * scale * scale) // value.denominator
    lo = Fraction(isqrt(scaled), scale)
    return lo, lo + Fraction(1, scale)


def _sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


def sign_sqrt_minus(x: Fraction, t: Fraction) -> int:
    """Sign of sqrt(x) - t, for x >= 0."""
    x, t = Fraction(x), Fraction(t)
    if x < 0:
        raise ValueError("square root of a negative rational")
    if t < 0:
        return 1
    return _sign(x - t * t)


def sign_sqrt_sum_minus(x: Fraction, y: Fraction, t: Fraction) -> int:
    """Sign of sqrt(x) + sqrt(y) - t, for x, y >= 0."""
    x, y, t = Fraction(x), Fraction(y), Fraction(t)
    if x < 0 or y < 0:
        raise ValueError("square root of a negative rational")
    if t < 0:
        return 1
    if t == 0:
        return 1 if (x > 0 or y > 0) else 0
    # sqrt(x) + sqrt(y) vs t  <=>  2 sqrt(xy) vs t^2 - x - y  (both sides squared once)
    return sign_sqrt_minus(4 * x * y, t * t - x - y)


def ceil_fraction(value: Fraction) -> int:
    value = Fraction(value)
    return -((-value.numerator) // value.denominator)
