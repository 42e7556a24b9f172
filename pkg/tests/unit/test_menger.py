"""Unit tests for the Menger engine."""

import pytest
from hypothesis import given, settings
from hypothesis.strategies import data as data_strategy

from src.digraph.core import from_arc_list
from src.menger.engine import (
    max_disjoint_paths,
    min_separator_size_brute_force,
    separate_neighborhoods,
    verify_path_family,
    verify_separator,
)
from src.models.schemas import PathFamily, Separator
from src.utils.errors import PreconditionError, VertexRangeError

from tests.strategies import digraphs, vertex_subsets


class TestMaxDisjointPaths:
    """Test cases for max_disjoint_paths."""

    def test_funnel_has_one_path(self, funnel):
        result = max_disjoint_paths(funnel, [0, 1], [3, 4])
        assert result.family.paths == [[0, 2, 3]]
        assert result.separator.S == [2]
        assert result.separator.A == [0, 1]
        assert result.separator.B == [3, 4]

    def test_overlapping_sets_give_trivial_paths(self, k4):
        result = max_disjoint_paths(k4, [1, 2, 3], [1, 2, 3])
        assert result.family.paths == [[1], [2], [3]]
        assert result.separator.S == [1, 2, 3]

    def test_paths_are_trimmed(self):
        # 0 -> 1 -> 2 -> 3 with U = {0, 1} and W = {2, 3}
        D = from_arc_list(4, [(0, 1), (1, 2), (2, 3)])
        result = max_disjoint_paths(D, [0, 1], [2, 3])
        assert result.family.paths == [[1, 2]]

    def test_unreachable_sink(self, path3):
        result = max_disjoint_paths(path3, [2], [0])
        assert result.family.paths == []
        assert result.separator.S == []
        assert verify_separator(path3, [2], [0], result.separator)

    def test_empty_side_rejected(self, k4):
        with pytest.raises(PreconditionError):
            max_disjoint_paths(k4, [], [1])

    def test_out_of_range_rejected(self, k4):
        with pytest.raises(VertexRangeError):
            max_disjoint_paths(k4, [0], [9])

    def test_deterministic(self, two_triangles):
        first = max_disjoint_paths(two_triangles, [1, 3], [2, 4])
        second = max_disjoint_paths(two_triangles, [3, 1], [4, 2])
        assert first == second


class TestSeparateNeighborhoods:
    """Test cases for separate_neighborhoods."""

    def test_two_triangles_hub(self, two_triangles):
        result = separate_neighborhoods(two_triangles, 0)
        assert result.family.U == [1, 3]
        assert result.family.W == [2, 4]
        assert result.family.paths == [[1, 2], [3, 4]]
        assert len(result.separator.S) == 2

    def test_sink_vertex(self, path3):
        result = separate_neighborhoods(path3, 2)
        assert result.family.paths == []
        assert result.separator.S == []

    def test_hub_is_avoided(self, directed_cycle):
        result = separate_neighborhoods(directed_cycle(4), 0)
        assert result.family.paths == [[1, 2, 3]]
        assert 0 not in result.separator.S


class TestVerifiers:
    """Test cases for the witness verifiers."""

    def test_rejects_shared_vertex(self, funnel):
        family = PathFamily(U=[0, 1], W=[3, 4], paths=[[0, 2, 3], [1, 2, 4]])
        assert not verify_path_family(funnel, [0, 1], [3, 4], family)

    def test_rejects_missing_arc(self, funnel):
        family = PathFamily(U=[0, 1], W=[3, 4], paths=[[0, 3]])
        assert not verify_path_family(funnel, [0, 1], [3, 4], family)

    def test_rejects_untrimmed_path(self):
        D = from_arc_list(4, [(0, 1), (1, 2), (2, 3)])
        family = PathFamily(U=[0, 1], W=[2, 3], paths=[[0, 1, 2]])
        assert not verify_path_family(D, [0, 1], [2, 3], family)

    def test_accepts_engine_output(self, funnel):
        result = max_disjoint_paths(funnel, [0, 1], [3, 4])
        assert verify_path_family(funnel, [0, 1], [3, 4], result.family)
        assert verify_separator(funnel, [0, 1], [3, 4], result.separator)

    def test_rejects_non_partition(self, funnel):
        separator = Separator(U=[0, 1], W=[3, 4], S=[2], A=[0, 1], B=[3])
        assert not verify_separator(funnel, [0, 1], [3, 4], separator)

    def test_rejects_arc_from_a_to_b(self, funnel):
        separator = Separator(U=[0, 1], W=[3, 4], S=[], A=[0, 1], B=[2, 3, 4])
        assert not verify_separator(funnel, [0, 1], [3, 4], separator)

    def test_rejects_leaky_separator(self, funnel):
        separator = Separator(U=[0, 1], W=[3, 4], S=[3], A=[0, 1, 2, 4], B=[])
        assert not verify_separator(funnel, [0, 1], [3, 4], separator)


class TestDuality:
    """Property tests: the family and the separator certify each other."""

    @settings(max_examples=60, deadline=None)
    @given(data_strategy())
    def test_family_size_equals_separator_size(self, data):
        D = data.draw(digraphs(max_n=7))
        U = data.draw(vertex_subsets(D.n, min_size=1))
        W = data.draw(vertex_subsets(D.n, min_size=1))
        result = max_disjoint_paths(D, U, W)
        assert verify_path_family(D, U, W, result.family)
        assert verify_separator(D, U, W, result.separator)
        assert result.family.size == len(result.separator.S)
        assert result.family.size == min_separator_size_brute_force(D, U, W)

    @pytest.mark.slow
    @settings(max_examples=200, deadline=None)
    @given(data_strategy())
    def test_duality_on_larger_digraphs(self, data):
        D = data.draw(digraphs(min_n=2, max_n=12))
        U = data.draw(vertex_subsets(D.n, min_size=1))
        W = data.draw(vertex_subsets(D.n, min_size=1))
        result = max_disjoint_paths(D, U, W)
        assert verify_path_family(D, U, W, result.family)
        assert verify_separator(D, U, W, result.separator)
        assert result.family.size == len(result.separator.S) == min_separator_size_brute_force(D, U, W)
