"""Constructive replay of the ceil(3r/22) lower bound on c(D) for r-regular D."""

from fractions import Fraction
from typing import FrozenSet, Optional

from ..density.dense import Mode, dense_subdigraph
from ..density.lemma import high_degree_vertex, min_vertex_threshold
from ..digraph.core import Digraph, arcs_between, is_regular
from ..menger.engine import separate_neighborhoods
from ..models.schemas import DensityParams, ProofReplay, TraceReport
from ..utils.config import config
from ..utils.errors import BudgetExceededError, NotRegularError, SoundnessError
from ..utils.logger import logger
from .packing import c_number, cycles_through, theorem1_bound

ALPHA = Fraction(3, 22)
BETA = Fraction(3, 11)
GAMMA = Fraction(4, 11)
DELTA = Fraction(4, 11)


def replay_cut_argument(D: Digraph, r: int, dense_vertices: FrozenSet[int], v: int) -> ProofReplay:
    """Cut quantities at hub v: separator of N+(v) from N-(v) in D, the
    induced partition of the dense part, and the Eulerian cut balance."""
    separator = separate_neighborhoods(D, v).separator
    S, A, B = set(separator.S), set(separator.A), set(separator.B)
    a_prime, b_prime, s_prime = A & dense_vertices, B & dense_vertices, S & dense_vertices

    if len(a_prime) > GAMMA * r:
        x_side = "A'"
        X, Y = a_prime, b_prime | s_prime
        outer = (A, B | S)
    else:
        x_side = "A'+S'"
        X, Y = a_prime | s_prime, b_prime
        outer = (A | S, B)

    _, cut = arcs_between(D, X, Y)
    forward, boundary = arcs_between(D, *outer)
    return ProofReplay(
        separator_size=len(S),
        a_prime=len(a_prime),
        b_prime=len(b_prime),
        s_prime=len(s_prime),
        x_side=x_side,
        x_size=len(X),
        y_size=len(Y),
        cut_arcs=cut,
        cut_threshold=BETA * r * r,
        boundary_arcs=boundary,
        boundary_forward_arcs=forward,
        separator_capacity=2 * r * len(S),
    )


def theorem1_trace(D: Digraph, mode: Mode = "exact", jobs: int = 1,
                   seed: Optional[int] = None) -> TraceReport:
    """Find a hub carrying at least ceil(3r/22) openly disjoint cycles the
    way the counting argument does.

    D' is a cut-robust (r, 3/11, 4/11)-dense subdigraph of D. The hub is the
    lowest-id vertex of D' with both degrees >= 4r/11 when its packing
    reaches the bound, else the best hub of D'. In exact mode a miss is
    raised as SoundnessError; in heuristic mode it is reported.
    """
    r = is_regular(D)
    if r is None or r < 1:
        raise NotRegularError("digraph is not r-regular for any r >= 1")
    if mode == "exact" and D.n > config.EXACT_PARTITION_CAP:
        raise BudgetExceededError(
            f"exact trace is capped at {config.EXACT_PARTITION_CAP} vertices, got {D.n}; "
            f"request heuristic mode"
        )

    params = DensityParams(r=r, alpha=ALPHA, beta=BETA, gamma=GAMMA, delta=DELTA)
    bound = theorem1_bound(r)
    logger.info(f"Trace: r={r}, n={D.n}, target ceil(3r/22)={bound}, mode={mode}")

    sub, witness = dense_subdigraph(D, r, BETA, GAMMA, mode, jobs, seed)
    kept = witness.vertices
    threshold = min_vertex_threshold(r, ALPHA, BETA)

    local = high_degree_vertex(sub, r, DELTA)
    replay = None
    hub_rule = "high_degree"
    packing = None
    if local is not None:
        hub = kept[local]
        packing = cycles_through(D, hub)
        replay = replay_cut_argument(D, r, frozenset(kept), hub)
        logger.debug(f"High-degree hub {hub}: {packing.size} cycles, separator {replay.separator_size}")

    if packing is None or packing.size < bound:
        c_sub, best = c_number(sub, jobs)
        if c_sub >= bound or packing is None:
            hub_rule = "dense_best"
            packing = cycles_through(D, kept[best.hub])
            logger.debug(f"c(D')={c_sub}; falling back to hub {packing.hub}")

    met = packing.size >= bound
    if not met:
        message = (f"hub {packing.hub} carries {packing.size} < {bound} cycles "
                   f"(v(D')={sub.n}, threshold >= {threshold.lower})")
        if witness.verified:
            logger.error(f"Trace failed on an exactly verified dense subdigraph: {message}")
            raise SoundnessError(message)
        logger.warning(f"Heuristic trace missed the bound: {message}")

    return TraceReport(
        params=params,
        mode=mode,
        dense=witness,
        threshold=threshold,
        hub=packing.hub,
        hub_rule=hub_rule,
        packing=packing,
        bound=bound,
        bound_met=met,
        replay=replay,
    )
