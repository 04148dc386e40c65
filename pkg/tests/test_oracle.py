"""Tests for the brute-force oracle."""

import pytest

from treeconn import (
    InstanceTooLargeError,
    InvalidArgumentError,
    SmallGraph,
    bipartite_terminal_vertices,
    complete_bipartite,
    complete_graph,
    oracle_kappa_k,
    oracle_max_tree_set,
    oracle_spanning_packing,
)


def _assert_valid_tree_set(graph: SmallGraph, terminals: frozenset[int], trees) -> None:
    """Independent sanity check of a returned packing."""
    adjacency = {e for e in graph.edges}
    seen_edges: set[tuple[int, int]] = set()
    vertex_sets = []
    for tree in trees:
        assert set(tree) <= adjacency
        assert not seen_edges & set(tree)
        seen_edges |= set(tree)
        vertices = {v for e in tree for v in e}
        assert terminals <= vertices
        assert len(tree) == len(vertices) - 1
        # connectivity by flood fill
        adj: dict[int, list[int]] = {}
        for u, v in tree:
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
        stack = [next(iter(vertices))]
        reached = set(stack)
        while stack:
            for w in adj.get(stack.pop(), []):
                if w not in reached:
                    reached.add(w)
                    stack.append(w)
        assert reached == vertices
        vertex_sets.append(vertices)
    for p1 in range(len(vertex_sets)):
        for p2 in range(p1 + 1, len(vertex_sets)):
            assert vertex_sets[p1] & vertex_sets[p2] == terminals


class TestMaxTreeSet:
    def test_two_terminals_same_side(self):
        graph = complete_bipartite(2, 2)
        result = oracle_max_tree_set(graph, frozenset({0, 1}))
        assert result.count == 2
        _assert_valid_tree_set(graph, frozenset({0, 1}), result.trees)

    def test_three_by_three_mixed(self):
        graph = complete_bipartite(3, 3)
        terminals = bipartite_terminal_vertices(3, 3, 3, 1)
        result = oracle_max_tree_set(graph, terminals)
        assert result.count == 2
        _assert_valid_tree_set(graph, terminals, result.trees)

    def test_degree_bound_is_tight(self):
        # y1 has degree 2 in K_{2,3}, capping the answer at 2
        graph = complete_bipartite(2, 3)
        result = oracle_max_tree_set(graph, bipartite_terminal_vertices(2, 3, 3, 1))
        assert result.count == 2

    def test_deterministic(self):
        graph = complete_bipartite(3, 3)
        terminals = bipartite_terminal_vertices(3, 3, 4, 2)
        first = oracle_max_tree_set(graph, terminals)
        second = oracle_max_tree_set(graph, terminals)
        assert first == second

    def test_guard(self):
        with pytest.raises(InstanceTooLargeError):
            oracle_max_tree_set(complete_bipartite(5, 6), frozenset({0, 1}))

    def test_needs_two_terminals(self):
        with pytest.raises(InvalidArgumentError):
            oracle_max_tree_set(complete_bipartite(2, 2), frozenset({0}))

    def test_needs_connected_graph(self):
        with pytest.raises(InvalidArgumentError):
            oracle_max_tree_set(SmallGraph(4, ((0, 1), (2, 3))), frozenset({0, 1}))


class TestSpanningPacking:
    @pytest.mark.parametrize("a,b,expected", [(2, 2, 1), (3, 4, 2), (2, 5, 1), (4, 4, 2)])
    def test_values(self, a, b, expected):
        assert oracle_spanning_packing(a, b) == expected

    def test_guard(self):
        with pytest.raises(InstanceTooLargeError):
            oracle_spanning_packing(3, 7)

    def test_star_has_one_tree(self):
        assert oracle_spanning_packing(1, 20) == 1


class TestKappaOracle:
    @pytest.mark.parametrize("a,b,k,expected", [(2, 2, 2, 2), (3, 3, 3, 2), (3, 3, 6, 1)])
    def test_values(self, a, b, k, expected):
        assert oracle_kappa_k(a, b, k) == expected

    def test_guard(self):
        with pytest.raises(InstanceTooLargeError):
            oracle_kappa_k(4, 5, 3)

    def test_rejects_bad_k(self):
        with pytest.raises(InvalidArgumentError):
            oracle_kappa_k(3, 3, 1)

    def test_spanning_case_agrees_with_packing_oracle(self):
        # where both guards allow the instance
        for a, b in [(1, 5), (2, 2), (2, 3), (2, 4), (2, 6), (3, 3), (3, 5), (4, 4)]:
            assert oracle_kappa_k(a, b, a + b) == oracle_spanning_packing(a, b)


class TestSmallGraph:
    def test_normalizes_edges(self):
        graph = SmallGraph(3, ((1, 0), (0, 1), (2, 0)))
        assert graph.edges == ((0, 1), (0, 2))

    def test_rejects_self_loops_and_range(self):
        with pytest.raises(InvalidArgumentError):
            SmallGraph(3, ((0, 0),))
        with pytest.raises(InvalidArgumentError):
            SmallGraph(3, ((0, 3),))

    def test_complete_graph_edge_count(self):
        assert len(complete_graph(6).edges) == 15
