"""Linked-set certificate for dtw(D) >= floor(r/20) on r-regular digraphs."""

from fractions import Fraction
from typing import Iterable, Optional

from ..density.dense import Mode, dense_subdigraph, second_stage_density
from ..density.lemma import high_degree_vertex
from ..digraph.core import Digraph, arcs_between, is_regular, reachable
from ..models.schemas import DensityParams, LinkedCertificate, SeparationReplay, Theorem2Report
from ..utils.errors import NotRegularError, SoundnessError
from ..utils.logger import logger
from .linked import find_unlinking_set

ALPHA = Fraction(1, 10)
BETA = Fraction(1, 10)
GAMMA = Fraction(3, 10)

# Second stage: D'' = D' - S is (r, 3/20, 17/10)-dense
BETA_SECOND = Fraction(3, 20)
GAMMA_SECOND = Fraction(17, 10)


def replay_separation(D: Digraph, r: int, L: Iterable[int], S: Iterable[int]) -> SeparationReplay:
    """Replay the cut around an unlinking set S of L.

    The hub is the lowest-id vertex of D'' = D[L - S] with both degrees at
    least (3/10)r. When S really leaves no majority component of L, one of
    its reach sides meets at most 3|L|/4 vertices of L, the split of L is
    then balanced, and every arc leaving the reach side starts in S.
    """
    L_set, removed = frozenset(L), frozenset(S)
    kept = sorted(L_set - removed)
    second, second_dense = second_stage_density(D, L_set, removed, r, BETA_SECOND, GAMMA_SECOND)
    base = dict(
        unlinking_set=sorted(removed),
        second_stage_size=second.n,
        second_stage_dense=second_dense,
        cut_threshold=BETA * r * r,
        leaving_limit=r * len(removed),
    )

    local = high_degree_vertex(second, r, GAMMA)
    if local is None:
        logger.warning(f"D - S restricted to L has no vertex with both degrees >= {GAMMA * r}")
        return SeparationReplay(**base)
    hub = kept[local]

    reach, side = "out", reachable(D, [hub], removed)
    if 4 * len(side & L_set) > 3 * len(L_set):
        reach, side = "in", reachable(D, [hub], removed, backward=True)

    X = side | removed
    Y = frozenset(D.vertices()) - X
    _, cut = arcs_between(D, X & L_set, Y & L_set)
    leaving, _ = arcs_between(D, X, Y) if reach == "out" else arcs_between(D, Y, X)
    logger.debug(f"Separation at hub {hub}: reach={reach}, cut={cut}, leaving={leaving}")
    return SeparationReplay(
        **base,
        hub=hub,
        reach=reach,
        reach_in_L=len(side & L_set),
        x_size=len(X & L_set),
        y_size=len(Y & L_set),
        cut_arcs=cut,
        leaving_arcs=leaving,
    )


def theorem2_certificate(D: Digraph, mode: Mode = "exact", jobs: int = 1,
                         seed: Optional[int] = None) -> Theorem2Report:
    """L = V(D') for a cut-robust (r, 1/10, 3/10)-dense D' is
    (floor(r/20) + 1)-linked; check it exhaustively.

    An unlinking set found for a heuristic dense part is reported together
    with the replay of the cut it induces.
    """
    r = is_regular(D)
    if r is None or r < 1:
        raise NotRegularError("digraph is not r-regular for any r >= 1")

    params = DensityParams(r=r, alpha=ALPHA, beta=BETA, gamma=GAMMA, delta=GAMMA)
    _, witness = dense_subdigraph(D, r, BETA, GAMMA, mode, jobs, seed)
    k = r // 20 + 1
    L = witness.vertices
    logger.info(f"Certificate: r={r}, |L|={len(L)}, k={k}")

    failing = find_unlinking_set(D, L, k, jobs)
    if failing is None:
        certificate = LinkedCertificate(L=L, k=k, verified_upto=k)
        return Theorem2Report(params=params, mode=mode, dense=witness,
                              certificate=certificate, bound=k - 1)

    replay = replay_separation(D, r, L, failing)
    if witness.verified:
        logger.error(f"Exactly verified L={L} fails to be {k}-linked at S={list(failing)}: "
                     f"cut={replay.cut_arcs}, leaving={replay.leaving_arcs}")
        raise SoundnessError(f"deleting {list(failing)} leaves no majority component of L")
    logger.warning(f"Heuristic dense part is not {k}-linked (S={list(failing)})")
    certificate = LinkedCertificate(L=L, k=k, verified_upto=len(failing))
    return Theorem2Report(params=params, mode=mode, dense=witness, certificate=certificate,
                          bound=max(len(failing) - 1, 0), failing_set=list(failing),
                          replay=replay)
