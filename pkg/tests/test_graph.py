import numpy as np
import pytest

from astopo.core.errors import DuplicateEdgeError, EmptyInputError
from astopo.core.graph import (
    Graph,
    build_graph,
    connected_components,
    degree_sequence,
    is_connected,
    largest_component,
)


class TestGraph:
    def test_edges_are_canonical(self):
        g = Graph(4, [(3, 1), (2, 0), (1, 0)])
        assert g.edges.tolist() == [[0, 1], [0, 2], [1, 3]]
        assert g.node_count == 4
        assert g.edge_count == 3

    def test_neighbors_sorted(self):
        g = Graph(5, [(0, 4), (0, 2), (0, 1)])
        assert g.neighbors(0).tolist() == [1, 2, 4]
        assert g.neighbors(4).tolist() == [0]
        assert g.has_edge(2, 0)
        assert not g.has_edge(1, 2)

    def test_degrees_sum_to_twice_edges(self, c5):
        assert c5.degrees.sum() == 2 * c5.edge_count
        assert degree_sequence(c5) == {v: 2 for v in range(5)}

    def test_arrays_are_read_only(self, k4):
        with pytest.raises(ValueError):
            k4.edges[0, 0] = 3
        with pytest.raises(ValueError):
            k4.indices[0] = 3

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError, match="Self-loop"):
            Graph(3, [(0, 1), (2, 2)])

    def test_duplicate_rejected(self):
        with pytest.raises(DuplicateEdgeError):
            Graph(3, [(0, 1), (1, 0)])

    def test_zero_nodes_rejected(self):
        with pytest.raises(EmptyInputError):
            Graph(0, [])

    def test_single_node(self):
        g = Graph(1, [])
        assert g.edge_count == 0
        assert g.degree(0) == 0
        assert is_connected(g)

    def test_equality_and_repr(self, k4):
        other = Graph(4, [(3, 2), (0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
        assert k4 == other
        assert repr(k4) == "Graph(N=4, M=6)"

    def test_to_scipy_is_symmetric(self, k4_minus_edge):
        a = k4_minus_edge.to_scipy().toarray()
        assert np.array_equal(a, a.T)
        assert a.sum() == 2 * k4_minus_edge.edge_count

    def test_subgraph_keeps_labels(self):
        g = build_graph([("a", "b"), ("b", "c"), ("c", "d")])
        sub = g.subgraph([1, 2])
        assert sub.labels == ("b", "c")
        assert sub.edge_count == 1

    def test_subgraph_of_unlabeled_uses_indices(self, p4):
        sub = p4.subgraph([2, 3])
        assert sub.labels == ("2", "3")


class TestBuildGraph:
    def test_first_appearance_order(self):
        g = build_graph([("701", "1239"), ("1239", "3356")])
        assert g.labels == ("701", "1239", "3356")
        assert g.index_of("3356") == 2
        assert g.label_of(0) == "701"

    def test_merge_counts_duplicates_and_loops(self):
        g = build_graph([("a", "b"), ("b", "a"), ("a", "a"), ("b", "c")])
        assert g.edge_count == 2
        assert g.stats.duplicates_merged == 1
        assert g.stats.self_loops_dropped == 1

    def test_reject_policy(self):
        with pytest.raises(DuplicateEdgeError) as info:
            build_graph([(1, 2), (2, 1)], dedup_policy="reject")
        assert info.value.edge == ("2", "1")

    def test_empty_input(self):
        with pytest.raises(EmptyInputError):
            build_graph([])

    def test_only_self_loops_keeps_node(self):
        g = build_graph([("x", "x")])
        assert g.node_count == 1
        assert g.edge_count == 0
        assert g.stats.self_loops_dropped == 1

    def test_extra_nodes_are_isolated(self):
        g = build_graph([("a", "b")], nodes=["c"])
        assert g.node_count == 3
        assert g.degree(2) == 0


class TestComponents:
    def test_sorted_by_size(self):
        g = Graph(7, [(5, 6), (0, 1), (1, 2), (3, 4)])
        partition = connected_components(g)
        assert partition.sizes == (3, 2, 2)
        assert partition.members(0).tolist() == [0, 1, 2]
        # Ties broken by the smallest node index
        assert partition.members(1).tolist() == [3, 4]
        assert partition.members(2).tolist() == [5, 6]

    def test_largest_component(self):
        g = build_graph([("a", "b"), ("b", "c"), ("x", "y")])
        giant = largest_component(g)
        assert giant.labels == ("a", "b", "c")
        assert not is_connected(g)
        assert is_connected(giant)

    def test_largest_component_tie_picks_smallest_index(self):
        g = Graph(4, [(2, 3), (0, 1)])
        giant = largest_component(g)
        assert giant.labels == ("0", "1")
        assert giant.edge_count == 1

    def test_connected_graph_is_its_own_giant(self, c5):
        assert largest_component(c5) is c5
