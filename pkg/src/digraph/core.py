"""Immutable simple digraph on vertices 0..n-1 and its primitive queries."""

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from ..utils.errors import (
    DuplicateArcError,
    LoopArcError,
    OverlapError,
    VertexRangeError,
)

Arc = Tuple[int, int]
VertexSet = Tuple[int, ...]


@dataclass(frozen=True)
class Digraph:
    """Simple loop-free digraph with sorted adjacency in both directions.

    Build instances with `from_arc_list`; the adjacency tuples are derived
    from `arcs` and never compared.
    """
    n: int
    arcs: Tuple[Arc, ...]
    out_adj: Tuple[Tuple[int, ...], ...] = field(repr=False, compare=False)
    in_adj: Tuple[Tuple[int, ...], ...] = field(repr=False, compare=False)
    arc_set: FrozenSet[Arc] = field(repr=False, compare=False)

    @property
    def v(self) -> int:
        """Number of vertices."""
        return self.n

    @property
    def a(self) -> int:
        """Number of arcs."""
        return len(self.arcs)

    def vertices(self) -> range:
        return range(self.n)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arc_set

    def out_neighbors(self, v: int) -> Tuple[int, ...]:
        return self.out_adj[v]

    def in_neighbors(self, v: int) -> Tuple[int, ...]:
        return self.in_adj[v]

    def out_degree(self, v: int) -> int:
        return len(self.out_adj[v])

    def in_degree(self, v: int) -> int:
        return len(self.in_adj[v])

    def min_out_degree(self) -> int:
        """0 for the empty digraph, likewise the other extremes."""
        return min((len(nbrs) for nbrs in self.out_adj), default=0)

    def min_in_degree(self) -> int:
        return min((len(nbrs) for nbrs in self.in_adj), default=0)

    def max_out_degree(self) -> int:
        return max((len(nbrs) for nbrs in self.out_adj), default=0)

    def max_in_degree(self) -> int:
        return max((len(nbrs) for nbrs in self.in_adj), default=0)


def _build(n: int, arcs: Iterable[Arc]) -> Digraph:
    """Assemble a Digraph from already validated, duplicate-free arcs."""
    ordered = tuple(sorted(arcs))
    out_lists: List[List[int]] = [[] for _ in range(n)]
    in_lists: List[List[int]] = [[] for _ in range(n)]
    for u, v in ordered:
        out_lists[u].append(v)
        in_lists[v].append(u)
    return Digraph(
        n=n,
        arcs=ordered,
        out_adj=tuple(tuple(nbrs) for nbrs in out_lists),
        in_adj=tuple(tuple(sorted(nbrs)) for nbrs in in_lists),
        arc_set=frozenset(ordered),
    )


def from_arc_list(n: int, arcs: Iterable[Sequence[int]]) -> Digraph:
    """Build a digraph, rejecting loops, duplicates and out-of-range ids."""
    if n < 0:
        raise VertexRangeError(f"vertex count must be non-negative, got {n}")
    seen = set()
    for arc in arcs:
        u, v = int(arc[0]), int(arc[1])
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"arc ({u},{v}) has a vertex outside 0..{n - 1}")
        if u == v:
            raise LoopArcError(f"loop arc ({u},{v}) is not allowed")
        if (u, v) in seen:
            raise DuplicateArcError(f"duplicate arc ({u},{v})")
        seen.add((u, v))
    return _build(n, seen)


def vertex_set(D: Digraph, X: Iterable[int]) -> VertexSet:
    """Validate ids and return them as a sorted duplicate-free tuple."""
    result = set()
    for x in X:
        x = int(x)
        if not 0 <= x < D.n:
            raise VertexRangeError(f"vertex {x} outside 0..{D.n - 1}")
        result.add(x)
    return tuple(sorted(result))


def is_regular(D: Digraph) -> Optional[int]:
    """Return r when every in- and out-degree equals r, else None."""
    if D.n == 0:
        return None
    r = D.out_degree(0)
    for v in D.vertices():
        if D.out_degree(v) != r or D.in_degree(v) != r:
            return None
    return r


def is_eulerian(D: Digraph) -> bool:
    """Every vertex has equal in- and out-degree."""
    return all(D.out_degree(v) == D.in_degree(v) for v in D.vertices())


def induced(D: Digraph, X: Iterable[int]) -> Tuple[Digraph, Dict[int, int]]:
    """D[X] relabelled to 0..|X|-1 in ascending order of the old ids."""
    kept = vertex_set(D, X)
    old_to_new = {old: new for new, old in enumerate(kept)}
    arcs = [
        (old_to_new[u], old_to_new[v])
        for u in kept
        for v in D.out_neighbors(u)
        if v in old_to_new
    ]
    return _build(len(kept), arcs), old_to_new


def reverse(D: Digraph) -> Digraph:
    """D with every arc reversed."""
    return _build(D.n, ((v, u) for u, v in D.arcs))


def reachable(D: Digraph, sources: Iterable[int], removed: FrozenSet[int] = frozenset(),
              backward: bool = False) -> FrozenSet[int]:
    """Vertices reachable from `sources` in D - removed (sources in `removed` are skipped)."""
    adj = D.in_adj if backward else D.out_adj
    seen = {s for s in sources if s not in removed}
    queue = deque(sorted(seen))
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in seen and w not in removed:
                seen.add(w)
                queue.append(w)
    return frozenset(seen)


def scc_without(D: Digraph, removed: Iterable[int] = ()) -> List[VertexSet]:
    """Strongly connected components of D - removed, in original ids.

    Iterative Tarjan; each component is sorted and the list is ordered by
    smallest member.
    """
    removed = frozenset(removed)
    index: Dict[int, int] = {}
    lowlink: Dict[int, int] = {}
    on_stack = set()
    stack: List[int] = []
    components: List[VertexSet] = []
    counter = 0

    for root in D.vertices():
        if root in removed or root in index:
            continue
        work = [(root, 0)]
        index[root] = lowlink[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, i = work[-1]
            nbrs = D.out_adj[v]
            if i < len(nbrs):
                work[-1] = (v, i + 1)
                w = nbrs[i]
                if w in removed:
                    continue
                if w not in index:
                    index[w] = lowlink[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, 0))
                elif w in on_stack:
                    lowlink[v] = min(lowlink[v], index[w])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])
            if lowlink[v] == index[v]:
                component = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    component.append(w)
                    if w == v:
                        break
                components.append(tuple(sorted(component)))

    components.sort()
    return components


def scc(D: Digraph) -> List[VertexSet]:
    """Strongly connected components of D."""
    return scc_without(D)


def arcs_between(D: Digraph, X: Iterable[int], Y: Iterable[int]) -> Tuple[int, int]:
    """Return (a(X,Y), a[X,Y]) for disjoint X and Y."""
    xs, ys = set(vertex_set(D, X)), set(vertex_set(D, Y))
    if xs & ys:
        raise OverlapError(f"vertex sets overlap on {sorted(xs & ys)}")
    forward = sum(1 for x in xs for w in D.out_neighbors(x) if w in ys)
    backward = sum(1 for y in ys for w in D.out_neighbors(y) if w in xs)
    return forward, forward + backward


def to_networkx(D: Digraph) -> nx.DiGraph:
    """Copy into a networkx DiGraph on nodes 0..n-1."""
    graph = nx.DiGraph()
    graph.add_nodes_from(D.vertices())
    graph.add_edges_from(D.arcs)
    return graph
