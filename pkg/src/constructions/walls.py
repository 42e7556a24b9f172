"""Cylindrical walls W_k on the grid [2k] x [2k]."""

from typing import List, Tuple

from ..digraph.core import Digraph, from_arc_list
from ..models.schemas import WallCoords
from ..utils.errors import PreconditionError


def cylindrical_wall(k: int) -> Tuple[Digraph, WallCoords]:
    """W_k with vertex (x, y) at id (y - 1) * 2k + (x - 1).

    Odd rows run left to right, even rows right to left; vertical arcs
    go from row y to row y mod 2k + 1 in odd columns from even rows and in
    even columns from odd rows.
    """
    if k < 1:
        raise PreconditionError(f"wall order must be at least 1, got {k}")
    side = 2 * k
    coords = WallCoords(k=k, coords=[(x, y) for y in range(1, side + 1) for x in range(1, side + 1)])
    arcs: List[Tuple[int, int]] = []
    for y in range(1, side + 1):
        for x in range(1, side + 1):
            here = coords.vertex(x, y)
            if y % 2 == 1 and x < side:
                arcs.append((here, coords.vertex(x + 1, y)))
            if y % 2 == 0 and x > 1:
                arcs.append((here, coords.vertex(x - 1, y)))
            if x % 2 != y % 2:
                arcs.append((here, coords.vertex(x, y % side + 1)))
    return from_arc_list(side * side, arcs), coords
