"""Digon graphs, symmetric orientations and an exact tree-width oracle.

For a symmetric orientation D of an undirected graph F the directed
tree-width of D equals tw(F); for any D, tw(digon graph) <= dtw(D).
"""

from typing import Dict, List

import networkx as nx

from ..digraph.core import Digraph, from_arc_list
from ..utils.config import config
from ..utils.errors import BudgetExceededError
from ..utils.logger import logger


def digon_graph(D: Digraph) -> nx.Graph:
    """Undirected graph on V(D) with an edge xy for every digon (x,y),(y,x)."""
    graph = nx.Graph()
    graph.add_nodes_from(D.vertices())
    graph.add_edges_from((u, v) for u, v in D.arcs if u < v and D.has_arc(v, u))
    return graph


def symmetric_orientation(F: nx.Graph) -> Digraph:
    """Both arcs for every edge; nodes are relabelled 0..n-1 in sorted order."""
    index = {node: i for i, node in enumerate(sorted(F.nodes))}
    arcs = []
    for u, v in F.edges:
        arcs.append((index[u], index[v]))
        arcs.append((index[v], index[u]))
    return from_arc_list(len(index), arcs)


def _elimination_degree(adj: List[int], eliminated: int, v: int) -> int:
    """Neighbours of v in the graph where the `eliminated` vertices were already
    eliminated: vertices outside eliminated|{v} reachable from v through it."""
    seen = 1 << v
    frontier = adj[v]
    reached = 0
    while frontier:
        new = frontier & ~seen
        if not new:
            break
        seen |= new
        reached |= new & ~eliminated
        inner = new & eliminated
        frontier = 0
        while inner:
            low = inner & -inner
            frontier |= adj[low.bit_length() - 1]
            inner ^= low
    return reached.bit_count()


def treewidth_small(F: nx.Graph) -> int:
    """Exact tree-width as the best elimination ordering (subset DP).

    TW(S) = min over v in S of max(TW(S - v), q(S - v, v)), where q counts the
    vertices outside S adjacent to v after eliminating S - v.
    """
    n = F.number_of_nodes()
    if n > config.TREEWIDTH_MAX_VERTICES:
        raise BudgetExceededError(
            f"tree-width oracle is limited to {config.TREEWIDTH_MAX_VERTICES} vertices, got {n}"
        )
    if n <= 1:
        return 0

    index = {node: i for i, node in enumerate(sorted(F.nodes))}
    adj = [0] * n
    for u, v in F.edges:
        if u != v:
            adj[index[u]] |= 1 << index[v]
            adj[index[v]] |= 1 << index[u]

    best: Dict[int, int] = {0: -1}
    for mask in range(1, 1 << n):
        value = n
        rest = mask
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            prior = mask ^ low
            candidate = max(best[prior], _elimination_degree(adj, prior, v))
            if candidate < value:
                value = candidate
        best[mask] = value
    result = best[(1 << n) - 1]
    logger.debug(f"tw={result} on {n} vertices, {F.number_of_edges()} edges")
    return result


def twedge_bound_holds(F: nx.Graph) -> bool:
    """A graph of tree-width t on n vertices has at most t(n - t) + C(t, 2) edges."""
    n = F.number_of_nodes()
    t = treewidth_small(F)
    return F.number_of_edges() <= t * (n - t) + t * (t - 1) // 2
