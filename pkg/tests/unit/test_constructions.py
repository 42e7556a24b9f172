"""Unit tests for walls, blow-ups and digraph generators."""

import pytest
from hypothesis import given, settings

from src.constructions.blowup import blow_up, lift_separator, project_walk
from src.constructions.generators import (
    complete_biorientation,
    join_construction,
    random_regular_digraph,
    reverse_join,
)
from src.constructions.walls import cylindrical_wall
from src.cycles.packing import c_number, cycles_through
from src.digraph.core import is_regular, scc
from src.menger.engine import separate_neighborhoods, verify_separator
from src.utils.errors import PreconditionError

from tests.strategies import regular_digraphs


class TestCylindricalWall:
    """Test cases for cylindrical_wall."""

    def test_smallest_wall(self):
        D, coords = cylindrical_wall(1)
        assert D.arcs == ((0, 1), (1, 3), (2, 0), (3, 2))
        assert coords.coords == [(1, 1), (2, 1), (1, 2), (2, 2)]

    @pytest.mark.parametrize("k", range(1, 9))
    def test_shape(self, k):
        D, coords = cylindrical_wall(k)
        side = 2 * k
        assert D.n == side * side
        assert D.a == side * (side - 1) + 2 * k * k
        assert D.max_out_degree() <= 2 and D.max_in_degree() <= 2
        assert D.min_out_degree() >= 1 and D.min_in_degree() >= 1
        assert all(D.out_degree(v) + D.in_degree(v) <= 3 for v in D.vertices())
        assert len(scc(D)) == 1
        assert coords.vertex(side, side) == D.n - 1

    def test_few_cycles_per_hub(self):
        D, _ = cylindrical_wall(2)
        c, _ = c_number(D)
        assert 1 <= c <= 2

    def test_invalid_order(self):
        with pytest.raises(PreconditionError):
            cylindrical_wall(0)


class TestBlowUp:
    """Test cases for blow_up and the separator transfer."""

    def test_cycle_blow_up(self, directed_cycle):
        D = blow_up(directed_cycle(3), 2)
        assert D.n == 6
        assert is_regular(D) == 2
        c, _ = c_number(D)
        assert c == 2

    def test_factor_one_is_identity(self, two_triangles):
        assert blow_up(two_triangles, 1) == two_triangles

    def test_lifted_separator(self, directed_cycle):
        C = directed_cycle(3)
        separator = separate_neighborhoods(C, 0).separator
        lifted = lift_separator(C, 2, separator)
        D = blow_up(C, 2)
        assert lifted.S == [2, 3]
        assert lifted.U == list(D.out_neighbors(1))
        assert verify_separator(D, lifted.U, lifted.W, lifted)
        assert cycles_through(D, 1).size == len(lifted.S)

    def test_project_walk(self):
        assert project_walk(2, [0, 3, 5]) == [0, 1, 2]

    @pytest.mark.slow
    @pytest.mark.parametrize("b", [1, 2, 3])
    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_c_grows_at_most_linearly(self, r, b):
        for n in range(2 * r + 2, 9):
            for seed in range(2):
                D = random_regular_digraph(n, r, seed)
                assert c_number(blow_up(D, b))[0] <= c_number(D)[0] * b

    @pytest.mark.parametrize("call", [
        lambda C: blow_up(C, 0),
        lambda C: project_walk(0, [0]),
    ])
    def test_invalid_factor(self, directed_cycle, call):
        with pytest.raises(PreconditionError):
            call(directed_cycle(3))


class TestGenerators:
    """Test cases for the digraph generators."""

    def test_complete_biorientation(self):
        D = complete_biorientation(5)
        assert is_regular(D) == 4
        assert D.a == 20
        with pytest.raises(PreconditionError):
            complete_biorientation(0)

    def test_join(self, directed_cycle):
        D = join_construction(directed_cycle(3), directed_cycle(3))
        assert D.n == 6
        assert D.a == 15
        assert scc(D) == [(0, 1, 2), (3, 4, 5)]

    def test_reverse_join(self, directed_cycle):
        D = reverse_join(directed_cycle(3))
        assert D.min_out_degree() >= 1
        assert D.min_in_degree() >= 1
        assert len(scc(D)) == 2

    def test_random_regular_is_deterministic(self):
        first = random_regular_digraph(10, 3, seed=1)
        assert is_regular(first) == 3
        assert random_regular_digraph(10, 3, seed=1) == first

    def test_dense_random_regular(self):
        assert is_regular(random_regular_digraph(8, 5, seed=2)) == 5

    @pytest.mark.parametrize("n, r", [(3, 3), (5, 0)])
    def test_random_regular_rejects_degree(self, n, r):
        with pytest.raises(PreconditionError):
            random_regular_digraph(n, r)

    @settings(max_examples=30, deadline=None)
    @given(regular_digraphs())
    def test_random_regular_property(self, D):
        r = is_regular(D)
        assert r is not None
        assert all(not D.has_arc(v, v) for v in D.vertices())
