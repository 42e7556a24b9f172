"""Blow-ups D x [b] and the transfer of hub separators to them."""

from typing import List, Sequence

from ..digraph.core import Digraph, from_arc_list, vertex_set
from ..models.schemas import Separator
from ..utils.errors import PreconditionError


def blow_up(D: Digraph, b: int) -> Digraph:
    """Replace every vertex v by copies v*b + i, i < b, with all arcs
    (u, i) -> (v, j) for (u, v) in A(D). An r-regular D becomes rb-regular."""
    if b < 1:
        raise PreconditionError(f"blow-up factor must be at least 1, got {b}")
    arcs = [(u * b + i, v * b + j) for u, v in D.arcs for i in range(b) for j in range(b)]
    return from_arc_list(D.n * b, arcs)


def _lift(ids: Sequence[int], b: int) -> List[int]:
    return [x * b + i for x in ids for i in range(b)]


def lift_separator(D: Digraph, b: int, separator: Separator) -> Separator:
    """Map a separator of N+(v) from N-(v) in D to one of N+((v, i)) from
    N-((v, i)) in blow_up(D, b), for any copy i, of size |S| * b."""
    if b < 1:
        raise PreconditionError(f"blow-up factor must be at least 1, got {b}")
    for part in (separator.U, separator.W, separator.S, separator.A, separator.B):
        vertex_set(D, part)
    return Separator(
        U=_lift(separator.U, b),
        W=_lift(separator.W, b),
        S=_lift(separator.S, b),
        A=_lift(separator.A, b),
        B=_lift(separator.B, b),
    )


def project_walk(b: int, sequence: Sequence[int]) -> List[int]:
    """Project blow-up vertices to their originals; a path projects to a walk."""
    if b < 1:
        raise PreconditionError(f"blow-up factor must be at least 1, got {b}")
    return [x // b for x in sequence]
