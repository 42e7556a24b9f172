"""Degree/size lemma for dense digraphs with few openly disjoint cycles.

With A = 1 - alpha/2, a dense digraph with max degrees <= r and
min{c, 2 dtw} < alpha*r has more than (A + sqrt(A^2 - 2 beta)) r vertices,
and under the second set of conditions on delta it has a vertex of in- and
out-degree at least delta*r. Every inequality is decided exactly.
"""

from fractions import Fraction
from typing import Optional

from ..digraph.core import Digraph
from ..models.schemas import LemmaCheck, ThresholdValue
from ..utils.errors import PreconditionError
from ..utils.logger import logger
from ..utils.rationals import sign_sqrt_minus, sign_sqrt_sum_minus, sqrt_enclosure

THRESHOLD_SCALE = 10 ** 13

HALF = Fraction(1, 2)


def check_lemma_preconditions(alpha: Fraction, beta: Fraction, gamma: Fraction,
                              delta: Fraction) -> LemmaCheck:
    """Evaluate both parts of the lemma's hypotheses.

    part2_ok is None when part 1 already fails. Non-positive parameters
    fail part 1.
    """
    alpha, beta, gamma, delta = (Fraction(p) for p in (alpha, beta, gamma, delta))
    A = 1 - alpha / 2
    disc = A * A - 2 * beta

    if min(alpha, beta, gamma) <= 0 or disc <= 0:
        logger.debug(f"Part 1 fails: alpha={alpha}, beta={beta}, gamma={gamma}, discriminant={disc}")
        return LemmaCheck(part1_ok=False)

    # gamma >= A - sqrt(disc)  <=>  sqrt(disc) >= A - gamma
    gamma_sign = sign_sqrt_minus(disc, A - gamma)
    part1 = gamma_sign >= 0
    gamma_on_boundary = gamma_sign == 0
    if not part1:
        return LemmaCheck(part1_ok=False)

    if not 0 < delta < HALF or sign_sqrt_minus(beta, 1 - delta) >= 0:
        logger.debug(f"Part 2 fails: delta={delta} is not below min(1/2, 1 - sqrt(beta))")
        return LemmaCheck(part1_ok=True, part2_ok=False, gamma_on_boundary=gamma_on_boundary)

    E = (1 - delta) ** 2 - beta
    # A + sqrt(disc) >= 2((1 - delta) - sqrt(E))
    lower_ok = sign_sqrt_sum_minus(disc, 4 * E, 2 * (1 - delta) - A) >= 0
    # beta / (1/2 - delta) <= 2((1 - delta) + sqrt(E))
    ratio_sign = sign_sqrt_minus(4 * E, beta / (HALF - delta) - 2 * (1 - delta))
    upper_ok = ratio_sign >= 0

    return LemmaCheck(
        part1_ok=True,
        part2_ok=lower_ok and upper_ok,
        gamma_on_boundary=gamma_on_boundary,
        delta_ratio_on_boundary=ratio_sign == 0,
    )


def min_vertex_threshold(r: int, alpha: Fraction, beta: Fraction) -> ThresholdValue:
    """(A + sqrt(A^2 - 2 beta)) r, exact or enclosed to within 1e-12 r."""
    A = 1 - Fraction(alpha) / 2
    disc = A * A - 2 * Fraction(beta)
    if disc < 0:
        raise PreconditionError(f"2*beta={2 * Fraction(beta)} exceeds (1 - alpha/2)^2={A * A}")
    lo, hi = sqrt_enclosure(disc, THRESHOLD_SCALE)
    if lo == hi:
        value = (A + lo) * r
        return ThresholdValue(exact=value, lower=value, upper=value)
    return ThresholdValue(lower=(A + lo) * r, upper=(A + hi) * r)


def high_degree_vertex(D: Digraph, r: int, delta: Fraction) -> Optional[int]:
    """Lowest-id vertex with both degrees at least delta*r."""
    bound = Fraction(delta) * r
    for v in D.vertices():
        if D.out_degree(v) >= bound and D.in_degree(v) >= bound:
            return v
    return None
