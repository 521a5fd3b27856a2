#!/usr/bin/env python3
"""
Unit tests for the graph model, spanning trees and numbering
"""

import pytest

from graph_confspace.core.error_handler import GraphStructureError
from graph_confspace.graphs.graph import (
    Graph, VertexNumbering, component_graphs, cut_vertices, default_numbering, essential_vertices,
    first_betti, number_vertices, spanning_tree
)


class TestGraph:
    """Test Graph construction and validation"""

    def test_from_edges_orders(self, y_graph):
        assert y_graph.vertices == ("h", "a1", "a2", "a3")
        assert y_graph.degree("h") == 3
        assert y_graph.has_edge("a2", "h")
        assert not y_graph.has_edge("a1", "a2")

    def test_parallel_edge_rejected(self):
        with pytest.raises(GraphStructureError, match="Parallel edge"):
            Graph.from_edges([("a", "b"), ("b", "a")])

    def test_unknown_root_rejected(self):
        with pytest.raises(GraphStructureError, match="Root"):
            Graph.from_edges([("a", "b")], root="z")

    def test_disconnected_needs_flag(self):
        with pytest.raises(GraphStructureError, match="disconnected"):
            Graph.from_edges([("a", "b"), ("c", "d")])
        assert Graph.from_edges([("a", "b"), ("c", "d")], disjoint_union=True).disjoint_union

    def test_bad_neighbour_order(self):
        with pytest.raises(GraphStructureError, match="Neighbour order"):
            Graph(vertices=("a", "b"), edges=(("a", "b"),), root="a", neighbor_order={"a": ("b",), "b": ()})

    def test_networkx_view(self, k5):
        g = k5.to_networkx()
        assert g.number_of_nodes() == 5
        assert g.number_of_edges() == 10


class TestNumbering:
    """Test spanning trees and depth-first numbering"""

    def test_spanning_tree_follows_neighbour_order(self, triangle):
        assert spanning_tree(triangle) == (("a", "b"), ("b", "c"))

    def test_root_gets_rank_one(self, theta_with_loop):
        numbering = default_numbering(theta_with_loop)
        assert numbering["a"] == 1
        assert sorted(numbering.ranks.values()) == list(range(1, 11))

    def test_depth_first_order(self, y_graph):
        numbering = default_numbering(y_graph)
        assert numbering.order == ("h", "a1", "a2", "a3")
        assert numbering.oriented("a3", "h") == (1, 4)
        assert numbering.vertex(2) == "a1"

    def test_custom_tree_changes_numbering(self, triangle):
        numbering = number_vertices(triangle, [("a", "c"), ("c", "b")])
        assert numbering.order == ("a", "c", "b")

    def test_tree_with_cycle_rejected(self, triangle):
        with pytest.raises(GraphStructureError, match="cycle"):
            number_vertices(triangle, [("a", "b"), ("b", "c"), ("c", "a")])

    def test_tree_must_use_graph_edges(self, y_graph):
        with pytest.raises(GraphStructureError, match="not an edge"):
            number_vertices(y_graph, [("a1", "a2")])

    def test_disjoint_union_forest(self, two_paths):
        numbering = default_numbering(two_paths)
        assert numbering.order == ("a", "b", "c", "x", "y", "z")

    def test_numbering_must_be_injective(self):
        with pytest.raises(GraphStructureError):
            VertexNumbering(order=("a", "a"))


class TestGraphInvariants:
    """Test Betti numbers, cut vertices and components"""

    def test_first_betti(self, k5, theta_with_loop, two_paths):
        assert first_betti(k5) == 6
        assert first_betti(theta_with_loop) == 3
        assert first_betti(two_paths) == 0

    def test_cut_vertices(self, figure_eight, theta_with_loop, triangle):
        assert cut_vertices(figure_eight) == ["v"]
        assert cut_vertices(theta_with_loop) == ["a", "v", "l0"]
        assert cut_vertices(triangle) == []

    def test_essential_vertices(self, star_graph, figure_eight):
        assert essential_vertices(star_graph(4)) == ["h"]
        assert essential_vertices(figure_eight) == ["v"]

    def test_component_graphs(self, two_paths):
        first, second = component_graphs(two_paths)
        assert first.vertices == ("a", "b", "c")
        assert second.root == "x"
        assert not second.disjoint_union
