#!/usr/bin/env python3
"""
Shared fixtures: small graphs with known configuration-space homology
"""

import itertools

import pytest

from graph_confspace.graphs.graph import Graph


def star(degree: int) -> Graph:
    return Graph.from_edges([("h", f"a{i}") for i in range(1, degree + 1)], root="h")


@pytest.fixture
def y_graph() -> Graph:
    """Star with three arms of one edge each"""
    return star(3)


@pytest.fixture
def star_graph():
    return star


@pytest.fixture
def triangle() -> Graph:
    return Graph.from_edges([("a", "b"), ("b", "c"), ("c", "a")])


@pytest.fixture
def k5() -> Graph:
    return Graph.from_edges(itertools.combinations("01234", 2))


@pytest.fixture
def figure_eight() -> Graph:
    """Two triangles sharing the vertex v"""
    return Graph.from_edges([
        ("v", "a1"), ("a1", "a2"), ("a2", "v"),
        ("v", "b1"), ("b1", "b2"), ("b2", "v"),
    ], root="v")


@pytest.fixture
def theta_with_loop() -> Graph:
    """Theta graph joined to a 4-cycle through the degree-2 cut vertex v"""
    return Graph.from_edges([
        ("a", "p1"), ("p1", "b"),
        ("a", "p2"), ("p2", "b"),
        ("a", "p3"), ("p3", "b"),
        ("a", "v"), ("v", "l0"),
        ("l0", "l1"), ("l1", "l2"), ("l2", "l3"), ("l3", "l0"),
    ], root="a")


@pytest.fixture
def bridged_triangles() -> Graph:
    """Two triangles joined by the bridge c-d"""
    return Graph.from_edges([
        ("a", "b"), ("b", "c"), ("c", "a"),
        ("c", "d"),
        ("d", "e"), ("e", "f"), ("f", "d"),
    ])


@pytest.fixture
def two_paths() -> Graph:
    """Disjoint union of two paths on three vertices"""
    return Graph.from_edges([("a", "b"), ("b", "c"), ("x", "y"), ("y", "z")], disjoint_union=True)


@pytest.fixture
def y_graph_file(tmp_path):
    path = tmp_path / "y.graph"
    path.write_text("# Y graph\nroot h\nedge h a\nedge h b\nedge h c\n")
    return path
