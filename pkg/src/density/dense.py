"""(r, beta, gamma)-dense digraphs and cut-robust dense subdigraphs.

A digraph is (r, beta, gamma)-dense when v(D) >= gamma*r and
a(D) >= r*v(D) - beta*r^2. A partition (X, Y) violates cut robustness when
both sides have at least gamma*r vertices and a[X, Y] <= beta*r^2.
"""

from fractions import Fraction
from functools import partial
from itertools import combinations
from typing import List, Literal, Optional, Sequence, Tuple

import numpy as np

from ..digraph.core import Digraph, induced
from ..models.schemas import DenseStep, DenseWitness
from ..utils.config import config
from ..utils.errors import BudgetExceededError, NotDenseError, PreconditionError, SoundnessError
from ..utils.logger import logger
from ..utils.parallel import first_hit
from ..utils.rationals import ceil_fraction

Mode = Literal["exact", "heuristic"]
Partition = Tuple[Tuple[int, ...], Tuple[int, ...]]
Shard = Tuple[int, int]


def is_dense(D: Digraph, r: int, beta: Fraction, gamma: Fraction) -> bool:
    beta, gamma = Fraction(beta), Fraction(gamma)
    return D.n >= gamma * r and D.a >= r * D.n - beta * r * r


def _arc_masks(D: Digraph) -> Tuple[List[int], List[int]]:
    out_masks = [sum(1 << w for w in D.out_neighbors(v)) for v in D.vertices()]
    in_masks = [sum(1 << w for w in D.in_neighbors(v)) for v in D.vertices()]
    return out_masks, in_masks


def _cut_size(out_masks: Sequence[int], in_masks: Sequence[int], x_mask: int, y_mask: int) -> int:
    """a[X, Y] from bitmasks."""
    total = 0
    v = 0
    while x_mask:
        if x_mask & 1:
            total += (out_masks[v] & y_mask).bit_count() + (in_masks[v] & y_mask).bit_count()
        x_mask >>= 1
        v += 1
    return total


def _side_bounds(n: int, r: int, gamma: Fraction) -> Tuple[int, int]:
    lo = max(1, ceil_fraction(Fraction(gamma) * r))
    return lo, n - lo


def _partition(n: int, x_mask: int) -> Partition:
    X = tuple(v for v in range(n) if x_mask >> v & 1)
    Y = tuple(v for v in range(n) if not x_mask >> v & 1)
    return X, Y


def _scan_shard(D: Digraph, limit: Fraction, shard: Shard) -> Optional[Partition]:
    """First violating X of the given size whose second member is `second`.

    X always contains vertex 0; a shard (1, 0) stands for X = {0}.
    """
    size, second = shard
    out_masks, in_masks = _arc_masks(D)
    full = (1 << D.n) - 1
    if size == 1:
        tails = [()]
        head = 1
    else:
        tails = combinations(range(second + 1, D.n), size - 2)
        head = 1 | 1 << second
    for tail in tails:
        x_mask = head
        for v in tail:
            x_mask |= 1 << v
        if _cut_size(out_masks, in_masks, x_mask, full ^ x_mask) <= limit:
            return _partition(D.n, x_mask)
    return None


def _exact_violation(D: Digraph, r: int, beta: Fraction, gamma: Fraction, jobs: int) -> Optional[Partition]:
    lo, hi = _side_bounds(D.n, r, gamma)
    if lo > hi:
        return None
    shards: List[Shard] = []
    for size in range(lo, hi + 1):
        if size == 1:
            shards.append((1, 0))
        else:
            shards.extend((size, second) for second in range(1, D.n - size + 2))
    logger.debug(f"Exact partition search: {len(shards)} shards, sides in [{lo}, {hi}]")
    return first_hit(partial(_scan_shard, D, beta * r * r), shards, jobs)


def _heuristic_violation(D: Digraph, r: int, beta: Fraction, gamma: Fraction, seed: int) -> Optional[Partition]:
    """Multi-start local search: flip single vertices while a[X, Y] drops."""
    lo, hi = _side_bounds(D.n, r, gamma)
    if lo > hi:
        return None
    limit = beta * r * r
    out_masks, in_masks = _arc_masks(D)
    full = (1 << D.n) - 1
    rng = np.random.default_rng(seed)

    for restart in range(config.HEURISTIC_RESTARTS):
        size = int(rng.integers(lo, hi + 1))
        x_mask = 0
        for v in rng.permutation(D.n)[:size]:
            x_mask |= 1 << int(v)
        cut = _cut_size(out_masks, in_masks, x_mask, full ^ x_mask)

        while cut > limit:
            x_count = x_mask.bit_count()
            best_v, best_gain = None, 0
            for v in range(D.n):
                in_x = x_mask >> v & 1
                if in_x and x_count - 1 < lo or not in_x and D.n - x_count - 1 < lo:
                    continue
                y_mask = full ^ x_mask
                to_x = (out_masks[v] & x_mask).bit_count() + (in_masks[v] & x_mask).bit_count()
                to_y = (out_masks[v] & y_mask).bit_count() + (in_masks[v] & y_mask).bit_count()
                # moving v across turns its arcs to the other side into cut arcs
                gain = to_y - to_x if in_x else to_x - to_y
                if gain > best_gain:
                    best_v, best_gain = v, gain
            if best_v is None:
                break
            x_mask ^= 1 << best_v
            cut -= best_gain

        if cut <= limit:
            logger.debug(f"Local search found a violating cut (a[X,Y]={cut}) on restart {restart}")
            if not x_mask & 1:
                x_mask = full ^ x_mask
            return _partition(D.n, x_mask)
    return None


def find_violating_partition(D: Digraph, r: int, beta: Fraction, gamma: Fraction,
                             mode: Mode = "exact", jobs: int = 1,
                             seed: Optional[int] = None) -> Optional[Partition]:
    """A partition with both sides >= gamma*r and a[X, Y] <= beta*r^2, if one exists.

    Exact mode is exhaustive over bipartitions with 0 in X and returns the
    first one in size-then-lexicographic order of X. Heuristic mode may miss
    violations. X always contains vertex 0.
    """
    beta, gamma = Fraction(beta), Fraction(gamma)
    if mode == "exact":
        if D.n > config.EXACT_PARTITION_CAP:
            raise BudgetExceededError(
                f"exact partition search is capped at {config.EXACT_PARTITION_CAP} vertices, got {D.n}"
            )
        return _exact_violation(D, r, beta, gamma, jobs)
    if mode == "heuristic":
        return _heuristic_violation(D, r, beta, gamma, config.DEFAULT_SEED if seed is None else seed)
    raise PreconditionError(f"unknown search mode {mode!r}")


def dense_subdigraph(D: Digraph, r: int, beta: Fraction, gamma: Fraction,
                     mode: Mode = "exact", jobs: int = 1,
                     seed: Optional[int] = None) -> Tuple[Digraph, DenseWitness]:
    """Descend into dense sides of violating cuts until none is left.

    Returns the induced subdigraph (relabelled 0..k-1 in increasing original
    id) and a witness in original ids. Since a(D') = a(D'[X]) + a(D'[Y]) +
    a[X, Y], a violating cut of a dense D' always has a dense side.
    """
    beta, gamma = Fraction(beta), Fraction(gamma)
    if not is_dense(D, r, beta, gamma):
        raise NotDenseError(f"digraph is not ({r}, {beta}, {gamma})-dense")

    current: Tuple[int, ...] = tuple(D.vertices())
    sub = D
    steps: List[DenseStep] = []
    while True:
        cut = find_violating_partition(sub, r, beta, gamma, mode, jobs, seed)
        if cut is None:
            break
        X = tuple(current[x] for x in cut[0])
        Y = tuple(current[y] for y in cut[1])
        sub_x, _ = induced(D, X)
        sub_y, _ = induced(D, Y)
        dense_x = is_dense(sub_x, r, beta, gamma)
        dense_y = is_dense(sub_y, r, beta, gamma)
        if not dense_x and not dense_y:
            logger.error(f"Neither side of the violating cut X={list(X)} is dense")
            raise SoundnessError(f"violating cut X={list(X)} has no dense side")
        keep_x = dense_x and (not dense_y or len(X) <= len(Y))
        steps.append(DenseStep(cut_X=list(X), kept="X" if keep_x else "Y"))
        current, sub = (X, sub_x) if keep_x else (Y, sub_y)
        logger.debug(f"Dense recursion step {len(steps)}: kept {len(current)} vertices")

    witness = DenseWitness(vertices=list(current), steps=steps, verified=(mode == "exact"))
    logger.info(f"Dense subdigraph on {len(current)} of {D.n} vertices after {len(steps)} steps ({mode})")
    return sub, witness


def density_bound_check(D: Digraph, full: bool = True) -> bool:
    """Whether 2a(D) < v(D)(v(D) + min{c(D), 2 tw(F)}), F the digon graph.

    tw(F) never exceeds the directed tree-width, so this is at least as strong
    as the bound with dtw. full=False drops the tree-width term.
    """
    from ..cycles.packing import c_number
    from ..dtw.treewidth import digon_graph, treewidth_small

    if D.n == 0:
        return True
    c, _ = c_number(D)
    term = c
    if full:
        term = min(c, 2 * treewidth_small(digon_graph(D)))
    holds = 2 * D.a < D.n * (D.n + term)
    if not holds:
        logger.error(f"Edge-count bound fails: a={D.a}, n={D.n}, term={term}")
    return holds


def second_stage_density(D: Digraph, dense_vertices: Sequence[int], S: Sequence[int], r: int,
                         beta: Fraction = Fraction(3, 20),
                         gamma: Fraction = Fraction(17, 10)) -> Tuple[Digraph, bool]:
    """D'' := D'[V(D') - S] and whether it is (r, beta, gamma)-dense.

    Removing |S| vertices costs at most 2r|S| arcs of D', so D'' keeps
    a(D'') >= r v(D'') - (beta' + |S|/r) r^2 when D' was (r, beta', gamma')-dense.
    """
    removed = set(S)
    kept = tuple(v for v in sorted(set(dense_vertices)) if v not in removed)
    sub, _ = induced(D, kept)
    return sub, is_dense(sub, r, beta, gamma)
