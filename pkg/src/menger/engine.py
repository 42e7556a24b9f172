"""Vertex-disjoint directed paths between vertex sets and dual separators.

Every vertex x is split into an in-copy 2x and an out-copy 2x+1 joined by
a unit-capacity arc; original arcs, source arcs (to in-copies of U) and sink
arcs (from out-copies of W) carry unbounded capacity, so every minimum cut
consists of internal arcs only, i.e. of vertices.
"""

from collections import deque
from itertools import combinations
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from ..digraph.core import Digraph, VertexSet, reachable, vertex_set
from ..models.schemas import MengerResult, PathFamily, Separator
from ..utils.errors import PreconditionError
from ..utils.logger import logger


class FlowNetwork:
    """Residual network with paired forward/backward edges.

    Edges are appended in a fixed order and scanned in that order, so the
    augmenting paths (and hence the returned family) are canonical.
    """

    def __init__(self, size: int):
        self.size = size
        self.heads: List[int] = []
        self.caps: List[int] = []
        self.adjacency: List[List[int]] = [[] for _ in range(size)]

    def add_edge(self, u: int, v: int, cap: int) -> int:
        edge = len(self.heads)
        self.heads.extend((v, u))
        self.caps.extend((cap, 0))
        self.adjacency[u].append(edge)
        self.adjacency[v].append(edge + 1)
        return edge

    def augment(self, source: int, sink: int) -> bool:
        """Push one unit along a shortest residual path (BFS)."""
        parent_edge = [-1] * self.size
        parent_edge[source] = -2
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for edge in self.adjacency[u]:
                w = self.heads[edge]
                if self.caps[edge] > 0 and parent_edge[w] == -1:
                    parent_edge[w] = edge
                    if w == sink:
                        queue.clear()
                        break
                    queue.append(w)
        if parent_edge[sink] == -1:
            return False
        node = sink
        while node != source:
            edge = parent_edge[node]
            self.caps[edge] -= 1
            self.caps[edge ^ 1] += 1
            node = self.heads[edge ^ 1]
        return True

    def residual_reachable(self, source: int) -> List[bool]:
        seen = [False] * self.size
        seen[source] = True
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for edge in self.adjacency[u]:
                w = self.heads[edge]
                if self.caps[edge] > 0 and not seen[w]:
                    seen[w] = True
                    queue.append(w)
        return seen


def _trim(path: Sequence[int], U: FrozenSet[int], W: FrozenSet[int]) -> List[int]:
    """Cut a U-W path down to its last U-vertex .. the first W-vertex after it."""
    start = max(i for i, x in enumerate(path) if x in U)
    end = next(i for i in range(start, len(path)) if path[i] in W)
    return list(path[start:end + 1])


def max_disjoint_paths(D: Digraph, U: Iterable[int], W: Iterable[int]) -> MengerResult:
    """Maximum family of vertex-disjoint U-W paths and a minimum U-W separator."""
    sources, sinks = vertex_set(D, U), vertex_set(D, W)
    if not sources or not sinks:
        raise PreconditionError("source and sink sets must be nonempty")

    n = D.n
    big = n + 1
    source, sink = 2 * n, 2 * n + 1
    network = FlowNetwork(2 * n + 2)
    internal = [network.add_edge(2 * x, 2 * x + 1, 1) for x in D.vertices()]
    arc_edges = {}
    for u, v in D.arcs:
        arc_edges[(u, v)] = network.add_edge(2 * u + 1, 2 * v, big)
    for u in sources:
        network.add_edge(source, 2 * u, big)
    sink_edges = {w: network.add_edge(2 * w + 1, sink, big) for w in sinks}

    value = 0
    while network.augment(source, sink):
        value += 1

    # Decompose: every used vertex carries exactly one unit
    def carries(edge: int) -> bool:
        return network.caps[edge ^ 1] > 0

    U_set, W_set = frozenset(sources), frozenset(sinks)
    paths = []
    for u in sources:
        if not carries(internal[u]) or not any(
            network.heads[e] == 2 * u and carries(e) for e in network.adjacency[source]
        ):
            continue
        path = [u]
        x = u
        while not (x in sink_edges and carries(sink_edges[x])):
            x = next(w for w in D.out_neighbors(x) if carries(arc_edges[(x, w)]))
            path.append(x)
        paths.append(_trim(path, U_set, W_set))
    paths.sort()

    seen = network.residual_reachable(source)
    S = tuple(x for x in D.vertices() if seen[2 * x] and not seen[2 * x + 1])
    A = reachable(D, sources, frozenset(S))
    B = tuple(x for x in D.vertices() if x not in A and x not in S)

    logger.debug(f"Menger: |U|={len(sources)} |W|={len(sinks)} flow={value} |S|={len(S)}")
    family = PathFamily(U=list(sources), W=list(sinks), paths=paths)
    separator = Separator(U=list(sources), W=list(sinks), S=list(S), A=sorted(A), B=list(B))
    return MengerResult(family=family, separator=separator)


def separate_neighborhoods(D: Digraph, v: int) -> MengerResult:
    """Disjoint N+(v)-N-(v) paths avoiding v, with the dual separator."""
    (v,) = vertex_set(D, [v])
    U, W = D.out_neighbors(v), D.in_neighbors(v)
    if not U or not W:
        A = reachable(D, U)
        B = [x for x in D.vertices() if x not in A]
        return MengerResult(
            family=PathFamily(U=list(U), W=list(W), paths=[]),
            separator=Separator(U=list(U), W=list(W), S=[], A=sorted(A), B=B),
        )
    return max_disjoint_paths(D, U, W)


def _as_ids(D: Digraph, ids: Iterable[int]) -> Optional[VertexSet]:
    ids = list(ids)
    if any(not isinstance(x, int) or not 0 <= x < D.n for x in ids):
        return None
    if len(set(ids)) != len(ids):
        return None
    return tuple(sorted(ids))


def verify_path_family(D: Digraph, U: Iterable[int], W: Iterable[int], family: PathFamily) -> bool:
    """Check disjointness, arcs and trimmed form of a path family."""
    U_ids, W_ids = _as_ids(D, U), _as_ids(D, W)
    if U_ids is None or W_ids is None:
        logger.debug("Path family rejected: invalid U or W")
        return False
    U_set, W_set = frozenset(U_ids), frozenset(W_ids)
    used = set()
    for path in family.paths:
        if not path or _as_ids(D, path) is None:
            logger.debug(f"Path family rejected: bad path {path}")
            return False
        if used & set(path):
            logger.debug(f"Path family rejected: path {path} shares a vertex")
            return False
        used.update(path)
        if any(not D.has_arc(x, y) for x, y in zip(path, path[1:])):
            logger.debug(f"Path family rejected: path {path} uses a missing arc")
            return False
        if [x for x in path if x in U_set] != [path[0]]:
            logger.debug(f"Path family rejected: path {path} is not trimmed at U")
            return False
        if [x for x in path if x in W_set] != [path[-1]]:
            logger.debug(f"Path family rejected: path {path} is not trimmed at W")
            return False
    return True


def verify_separator(D: Digraph, U: Iterable[int], W: Iterable[int], separator: Separator) -> bool:
    """Check the partition, the absence of A->B arcs and U-W unreachability in D - S."""
    U_ids, W_ids = _as_ids(D, U), _as_ids(D, W)
    parts = [_as_ids(D, part) for part in (separator.S, separator.A, separator.B)]
    if U_ids is None or W_ids is None or any(part is None for part in parts):
        logger.debug("Separator rejected: invalid vertex ids")
        return False
    S, A, B = (set(part) for part in parts)
    if S & A or S & B or A & B or len(S | A | B) != D.n:
        logger.debug("Separator rejected: (S, A, B) is not a partition of V(D)")
        return False
    if any(w in B for a in A for w in D.out_neighbors(a)):
        logger.debug("Separator rejected: an arc runs from A to B")
        return False
    hit = reachable(D, U_ids, frozenset(S)) & set(W_ids)
    if hit:
        logger.debug(f"Separator rejected: W reachable from U in D - S at {sorted(hit)}")
        return False
    return True


def min_separator_size_brute_force(D: Digraph, U: Iterable[int], W: Iterable[int]) -> int:
    """Smallest |S| destroying every U-W path, by enumeration (duality oracle)."""
    if D.n > 14:
        raise PreconditionError("brute-force separator search is limited to 14 vertices")
    sources, sinks = vertex_set(D, U), frozenset(vertex_set(D, W))
    for size in range(D.n + 1):
        for S in combinations(D.vertices(), size):
            if not reachable(D, sources, frozenset(S)) & sinks:
                return size
    return D.n
