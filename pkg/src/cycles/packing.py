"""Exact c(D): openly disjoint directed cycles through a common hub."""

from collections import deque
from functools import partial
from typing import List, Optional, Tuple

import networkx as nx

from ..digraph.core import Digraph, is_regular, to_networkx, vertex_set
from ..menger.engine import separate_neighborhoods
from ..models.schemas import CyclePacking
from ..utils.config import config
from ..utils.errors import BudgetExceededError, NotRegularError, PreconditionError, SoundnessError
from ..utils.logger import logger
from ..utils.parallel import ordered_map


def cycles_through(D: Digraph, v: int) -> CyclePacking:
    """Maximum packing at hub v: each trimmed N+(v)-N-(v) path closes through v."""
    result = separate_neighborhoods(D, v)
    cycles = [[v, *path, v] for path in result.family.paths]
    return CyclePacking(hub=v, cycles=cycles)


def _hub_size(D: Digraph, v: int) -> int:
    return cycles_through(D, v).size


def c_number(D: Digraph, jobs: int = 1) -> Tuple[int, CyclePacking]:
    """c(D) with a packing attaining it; ties go to the lowest hub id."""
    if D.n == 0:
        raise PreconditionError("c(D) is undefined for the empty digraph (n = 0): there is no hub")
    sizes = ordered_map(partial(_hub_size, D), list(D.vertices()), jobs)
    best_size = max(sizes)
    hub = sizes.index(best_size)
    logger.debug(f"c(D)={best_size} attained at hub {hub} (n={D.n}, a={D.a})")
    return best_size, cycles_through(D, hub)


def verify_cycle_packing(D: Digraph, packing: CyclePacking) -> bool:
    """Check that every cycle is a directed cycle through the hub and that
    the cycles are disjoint away from the hub."""
    hub = packing.hub
    if not isinstance(hub, int) or not 0 <= hub < D.n:
        logger.debug(f"Packing rejected: hub {hub} out of range")
        return False
    used = set()
    for cycle in packing.cycles:
        if len(cycle) < 3 or cycle[0] != hub or cycle[-1] != hub:
            logger.debug(f"Packing rejected: {cycle} does not start and end at the hub")
            return False
        interior = cycle[1:-1]
        if any(not isinstance(x, int) or not 0 <= x < D.n for x in interior):
            logger.debug(f"Packing rejected: {cycle} has an out-of-range vertex")
            return False
        if hub in interior or len(set(interior)) != len(interior):
            logger.debug(f"Packing rejected: {cycle} repeats a vertex")
            return False
        if any(not D.has_arc(x, y) for x, y in zip(cycle, cycle[1:])):
            logger.debug(f"Packing rejected: {cycle} uses a missing arc")
            return False
        if used & set(interior):
            logger.debug(f"Packing rejected: {cycle} meets another cycle away from the hub")
            return False
        used.update(interior)
    return True


def _max_disjoint(sets: List[Tuple[frozenset, int, int]], start: int, used: frozenset,
                  out_free: frozenset, in_free: frozenset, best: List[int], current: int) -> None:
    """Branch and bound over candidate vertex sets; each cycle consumes one
    out- and one in-neighbour of the hub."""
    best[0] = max(best[0], current)
    if current + min(len(out_free), len(in_free)) <= best[0]:
        return
    for i in range(start, len(sets)):
        members, first, last = sets[i]
        if members & used or first not in out_free or last not in in_free:
            continue
        _max_disjoint(sets, i + 1, used | members, out_free - {first}, in_free - {last},
                      best, current + 1)


def c_brute_force(D: Digraph) -> int:
    """c(D) by enumerating simple cycles (networkx) and packing them exhaustively."""
    if D.n > config.BRUTE_FORCE_MAX_VERTICES:
        raise BudgetExceededError(
            f"brute force is limited to {config.BRUTE_FORCE_MAX_VERTICES} vertices, got {D.n}"
        )
    through = {v: set() for v in D.vertices()}
    for cycle in nx.simple_cycles(to_networkx(D)):
        for i, v in enumerate(cycle):
            rotated = cycle[i:] + cycle[:i]
            through[v].add((frozenset(rotated[1:]), rotated[1], rotated[-1]))

    answer = 0
    for v in D.vertices():
        candidates = sorted(through[v], key=lambda item: (len(item[0]), sorted(item[0]), item[1], item[2]))
        best = [0]
        _max_disjoint(candidates, 0, frozenset(), frozenset(D.out_neighbors(v)),
                      frozenset(D.in_neighbors(v)), best, 0)
        answer = max(answer, best[0])
    return answer


def theorem1_bound(r: int) -> int:
    """ceil(3r/22)."""
    return -(-3 * r // 22)


def guaranteed_packing(D: Digraph) -> CyclePacking:
    """First hub (ascending id) whose packing reaches ceil(3r/22)."""
    r = is_regular(D)
    if r is None or r < 1:
        raise NotRegularError("digraph is not r-regular for any r >= 1")
    bound = theorem1_bound(r)
    for v in D.vertices():
        packing = cycles_through(D, v)
        if packing.size >= bound:
            logger.debug(f"Hub {v} carries {packing.size} >= {bound} cycles (r={r})")
            return packing
    logger.error(f"No hub reaches {bound} cycles in an {r}-regular digraph")
    raise SoundnessError(f"no hub carries ceil(3r/22)={bound} openly disjoint cycles (r={r})")


def girth(D: Digraph) -> Optional[int]:
    """Length of a shortest directed cycle, None when D is acyclic."""
    best = None
    for v in D.vertices():
        dist = {v: 0}
        queue = deque([v])
        while queue:
            u = queue.popleft()
            if best is not None and dist[u] + 1 >= best:
                break
            for w in D.out_neighbors(u):
                if w == v:
                    best = dist[u] + 1 if best is None else min(best, dist[u] + 1)
                elif w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
    return best


def girth_relation_holds(D: Digraph, c: Optional[int] = None) -> bool:
    """v(D) >= c(D)(g - 1) + 1; vacuous for acyclic digraphs."""
    g = girth(D)
    if g is None:
        return True
    if c is None:
        c, _ = c_number(D)
    return D.n >= c * (g - 1) + 1
