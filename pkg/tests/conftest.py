"""Pytest configuration and fixtures."""

import pytest

from src.constructions.generators import complete_biorientation
from src.digraph.core import from_arc_list
from src.digraph.edgelist import write_graph


@pytest.fixture
def k4():
    """Complete biorientation on four vertices (3-regular)."""
    return complete_biorientation(4)


@pytest.fixture
def two_k4():
    """Two disjoint copies of the K4 biorientation on 0..3 and 4..7."""
    arcs = [(u + shift, v + shift) for shift in (0, 4) for u in range(4) for v in range(4) if u != v]
    return from_arc_list(8, arcs)


@pytest.fixture
def directed_cycle():
    """Factory for the directed cycle 0 -> 1 -> ... -> n-1 -> 0."""
    def build(n: int):
        return from_arc_list(n, [(i, (i + 1) % n) for i in range(n)])
    return build


@pytest.fixture
def path3():
    """Directed path 0 -> 1 -> 2."""
    return from_arc_list(3, [(0, 1), (1, 2)])


@pytest.fixture
def two_triangles():
    """Triangles 0 -> 1 -> 2 -> 0 and 0 -> 3 -> 4 -> 0 sharing vertex 0."""
    return from_arc_list(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])


@pytest.fixture
def funnel():
    """Sources 0, 1 and sinks 3, 4 joined only through vertex 2."""
    return from_arc_list(5, [(0, 2), (1, 2), (2, 3), (2, 4)])


@pytest.fixture
def graph_file(tmp_path):
    """Factory writing a graph to an edge-list file and returning its path."""
    counter = [0]

    def write(graph) -> str:
        counter[0] += 1
        path = tmp_path / f"graph_{counter[0]}.txt"
        write_graph(path, graph)
        return str(path)
    return write
