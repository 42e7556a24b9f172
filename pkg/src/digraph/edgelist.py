"""Edge-list text format shared by the CLI and the generators.

Lines starting with `#` are ignored. The first remaining line is `n m`,
followed by exactly m lines `u v`. An undirected graph carries an extra
first line `u`. Writers emit arcs sorted lexicographically.
"""

from pathlib import Path
from typing import List, Tuple, Union

import networkx as nx

from ..utils.errors import EdgeListFormatError
from .core import Digraph, from_arc_list

Graph = Union[Digraph, nx.Graph]


def _content_lines(text: str) -> List[Tuple[int, str]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        lines.append((number, stripped))
    return lines


def _parse_pair(number: int, line: str) -> Tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise EdgeListFormatError(f"expected two integers, got {line!r}", number)
    try:
        return int(parts[0]), int(parts[1])
    except ValueError as e:
        raise EdgeListFormatError(f"expected two integers, got {line!r}", number) from e


def parse_edge_list(text: str) -> Graph:
    """Parse a digraph, or an undirected networkx graph when flagged `u`."""
    lines = _content_lines(text)
    undirected = bool(lines) and lines[0][1] == "u"
    if undirected:
        lines = lines[1:]
    if not lines:
        raise EdgeListFormatError("missing header line `n m`", 1)

    header_number, header = lines[0]
    n, m = _parse_pair(header_number, header)
    if n < 0 or m < 0:
        raise EdgeListFormatError("negative vertex or arc count", header_number)
    body = lines[1:]
    if len(body) != m:
        last = body[-1][0] if body else header_number
        raise EdgeListFormatError(f"expected {m} arc lines, found {len(body)}", last)

    pairs = []
    seen = set()
    for number, line in body:
        u, v = _parse_pair(number, line)
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListFormatError(f"vertex out of range in {line!r}", number)
        if u == v:
            raise EdgeListFormatError(f"loop {line!r}", number)
        key = (min(u, v), max(u, v)) if undirected else (u, v)
        if key in seen:
            raise EdgeListFormatError(f"duplicate arc {line!r}", number)
        seen.add(key)
        pairs.append((number, u, v))

    if undirected:
        graph = nx.Graph()
        graph.add_nodes_from(range(n))
        graph.add_edges_from((u, v) for _, u, v in pairs)
        return graph

    return from_arc_list(n, [(u, v) for _, u, v in pairs])


def format_edge_list(graph: Graph) -> str:
    """Render a digraph (or an undirected graph on 0..n-1) as edge-list text."""
    if isinstance(graph, Digraph):
        lines = [f"{graph.n} {graph.a}"]
        lines.extend(f"{u} {v}" for u, v in graph.arcs)
        return "\n".join(lines) + "\n"

    edges = sorted(tuple(sorted((int(u), int(v)))) for u, v in graph.edges())
    lines = ["u", f"{graph.number_of_nodes()} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def read_graph(path: Union[str, Path]) -> Graph:
    """Read an edge-list file."""
    return parse_edge_list(Path(path).read_text(encoding="utf-8"))


def write_graph(path: Union[str, Path], graph: Graph) -> None:
    """Write a graph in edge-list format."""
    Path(path).write_text(format_edge_list(graph), encoding="utf-8")
