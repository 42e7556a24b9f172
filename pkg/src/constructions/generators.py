"""Complete biorientations, one-way joins and random regular digraphs."""

from typing import Optional, Set, Tuple

import numpy as np

from ..digraph.core import Digraph, from_arc_list, reverse
from ..utils.config import config
from ..utils.errors import BudgetExceededError, PreconditionError
from ..utils.logger import logger


def complete_biorientation(n: int) -> Digraph:
    """All n(n - 1) arcs; (n - 1)-regular."""
    if n < 1:
        raise PreconditionError(f"need at least one vertex, got {n}")
    return from_arc_list(n, [(u, v) for u in range(n) for v in range(n) if u != v])


def join_construction(F1: Digraph, F2: Digraph) -> Digraph:
    """Disjoint union of F1 (ids 0..) and F2 (shifted by v(F1)) plus every
    arc from V(F2) to V(F1). No arc returns from F1 to F2, so the strong
    components are those of the parts."""
    shift = F1.n
    arcs = list(F1.arcs)
    arcs.extend((u + shift, v + shift) for u, v in F2.arcs)
    arcs.extend((u + shift, v) for u in F2.vertices() for v in F1.vertices())
    return from_arc_list(F1.n + F2.n, arcs)


def reverse_join(F: Digraph) -> Digraph:
    """join_construction(F, reverse(F)): both minimum degrees are at least
    delta+(F), while the strong components stay those of F and its reverse."""
    return join_construction(F, reverse(F))


def _derangement_layer(rng: np.random.Generator, n: int, used: Set[Tuple[int, int]]) -> Optional[list]:
    """A permutation layer avoiding fixed points and arcs already in `used`.

    Starts from a uniform permutation and repairs conflicts by random
    transpositions that never increase the number of conflicts.
    """
    def ok(v: int, w: int) -> bool:
        return v != w and (v, w) not in used

    perm = [int(w) for w in rng.permutation(n)]
    bad = {v for v in range(n) if not ok(v, perm[v])}
    for _ in range(config.REGULAR_RETRY_BUDGET * n):
        if not bad:
            return [(v, perm[v]) for v in range(n)]
        ordered = sorted(bad)
        i = ordered[int(rng.integers(len(ordered)))]
        j = int(rng.integers(n))
        before = (i in bad) + (j in bad)
        after = (not ok(i, perm[j])) + (not ok(j, perm[i]))
        if i != j and after <= before:
            perm[i], perm[j] = perm[j], perm[i]
            for v in (i, j):
                if ok(v, perm[v]):
                    bad.discard(v)
                else:
                    bad.add(v)
    return None


def random_regular_digraph(n: int, r: int, seed: Optional[int] = None) -> Digraph:
    """Union of r random fixed-point-free permutations with disjoint arc sets.

    Each layer is repaired into shape; a stuck layer restarts the whole draw.
    The result only depends on (n, r, seed).
    """
    if r < 1 or r >= n:
        raise PreconditionError(f"need 1 <= r <= n - 1, got n={n}, r={r}")
    rng = np.random.default_rng(config.DEFAULT_SEED if seed is None else seed)

    for attempt in range(config.REGULAR_RETRY_BUDGET):
        used: Set[Tuple[int, int]] = set()
        for _ in range(r):
            layer = _derangement_layer(rng, n, used)
            if layer is None:
                break
            used.update(layer)
        else:
            logger.debug(f"Random {r}-regular digraph on {n} vertices after {attempt + 1} attempts")
            return from_arc_list(n, used)

    raise BudgetExceededError(
        f"no {r}-regular digraph on {n} vertices within {config.REGULAR_RETRY_BUDGET} attempts"
    )
