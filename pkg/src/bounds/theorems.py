"""Closed-form bounds on c_r and dtw for r-regular digraphs, in integers."""

from fractions import Fraction
from typing import Mapping

from ..models.schemas import BoundsReport
from ..utils.errors import PreconditionError

LIMIT_LOWER = Fraction(3, 22)
LIMIT_UPPER = Fraction(7, 8)


def theorem_bounds(r: int) -> BoundsReport:
    """Lower and upper bounds on c(D) and dtw(D) over r-regular digraphs."""
    if r < 1:
        raise PreconditionError(f"r must be at least 1, got {r}")
    c_upper = 7 * -(-r // 8)
    return BoundsReport(
        r=r,
        c_lower=-(-3 * r // 22),
        c_upper=c_upper,
        c_upper_capped=min(c_upper, r),
        dtw_lower=r // 20,
        limit_interval=(LIMIT_LOWER, LIMIT_UPPER),
    )


def propagate_upper_bounds(known: Mapping[int, int], n: int) -> int:
    """Best upper bound on c_n from known bounds ub(r) >= c_r.

    c_n <= c_{(q+1)r} <= (q+1) ub(r) with n = qr + s, s in [r], i.e. the
    factor is ceil(n/r); c_n <= n always.
    """
    if n < 1:
        raise PreconditionError(f"n must be at least 1, got {n}")
    best = n
    for r, bound in known.items():
        if r < 1 or bound < 1:
            raise PreconditionError(f"known bounds need r, ub >= 1, got c_{r} <= {bound}")
        best = min(best, -(-n // r) * bound)
    return best
