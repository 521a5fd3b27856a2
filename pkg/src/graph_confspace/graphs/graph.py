#!/usr/bin/env python3
"""
Graph model - simple graphs with a root and a per-vertex neighbour order

The neighbour order plays the role of a plane embedding: depth-first
numbering descends into branches in that order.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from ..core.error_handler import GraphStructureError

Edge = Tuple[str, str]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with root and neighbour order"""
    vertices: Tuple[str, ...]
    edges: Tuple[Edge, ...]
    root: str
    neighbor_order: Mapping[str, Tuple[str, ...]]
    disjoint_union: bool = False

    def __post_init__(self) -> None:
        if not self.vertices:
            raise GraphStructureError("Graph has no vertices", operation="graph")
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphStructureError("Duplicate vertex identifiers", operation="graph")

        vertex_set = set(self.vertices)
        seen = set()
        adjacency: Dict[str, set] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            if u == v:
                raise GraphStructureError(f"Self-loop at vertex {u}", operation="graph")
            if u not in vertex_set or v not in vertex_set:
                raise GraphStructureError(f"Edge {u}-{v} uses an unknown vertex", operation="graph")
            key = frozenset((u, v))
            if key in seen:
                raise GraphStructureError(f"Parallel edge {u}-{v}", operation="graph")
            seen.add(key)
            adjacency[u].add(v)
            adjacency[v].add(u)

        for v in self.vertices:
            order = tuple(self.neighbor_order.get(v, ()))
            if len(order) != len(adjacency[v]) or set(order) != adjacency[v]:
                raise GraphStructureError(
                    f"Neighbour order at {v} is not a permutation of its neighbours",
                    operation="graph"
                )

        if self.root not in vertex_set:
            raise GraphStructureError(f"Root {self.root} is not a vertex", operation="graph")

        if not self.disjoint_union and nx.number_connected_components(self.to_networkx()) != 1:
            raise GraphStructureError(
                "Graph is disconnected; add the 'disjoint' directive for disjoint unions",
                operation="graph"
            )

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[Sequence[str]],
        root: Optional[str] = None,
        disjoint_union: bool = False
    ) -> "Graph":
        """
        Build a graph whose vertex and neighbour orders follow first appearance

        Args:
            edges: Vertex pairs in listing order
            root: Root vertex; defaults to the first vertex mentioned
            disjoint_union: Allow several connected components

        Returns:
            Graph instance
        """
        vertices: List[str] = []
        order: Dict[str, List[str]] = {}
        edge_list: List[Edge] = []
        for pair in edges:
            u, v = str(pair[0]), str(pair[1])
            for w in (u, v):
                if w not in order:
                    order[w] = []
                    vertices.append(w)
            if u != v:
                if v not in order[u]:
                    order[u].append(v)
                if u not in order[v]:
                    order[v].append(u)
            edge_list.append((u, v))
        return cls(
            vertices=tuple(vertices),
            edges=tuple(edge_list),
            root=root if root is not None else (vertices[0] if vertices else ""),
            neighbor_order={v: tuple(ns) for v, ns in order.items()},
            disjoint_union=disjoint_union,
        )

    def degree(self, v: str) -> int:
        return len(self.neighbor_order[v])

    def neighbors(self, v: str) -> Tuple[str, ...]:
        return tuple(self.neighbor_order[v])

    def has_edge(self, u: str, v: str) -> bool:
        return v in self.neighbor_order.get(u, ())

    def to_networkx(self) -> nx.Graph:
        """Undirected networkx view with vertices and edges in listing order"""
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g

    def to_ordered_digraph(self, allowed: Optional[Iterable[Edge]] = None) -> nx.DiGraph:
        """
        Directed view whose successor order at every vertex is its neighbour order

        Args:
            allowed: Restrict to these undirected edges (e.g. a spanning tree)
        """
        keep = None if allowed is None else {frozenset(e) for e in allowed}
        d = nx.DiGraph()
        d.add_nodes_from(self.vertices)
        for v in self.vertices:
            for w in self.neighbor_order[v]:
                if keep is None or frozenset((v, w)) in keep:
                    d.add_edge(v, w)
        return d


@dataclass(frozen=True)
class VertexNumbering:
    """Bijection from vertices onto 1..|V|; order[i] has rank i + 1"""
    order: Tuple[str, ...]
    ranks: Mapping[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(set(self.order)) != len(self.order):
            raise GraphStructureError("Vertex numbering is not injective", operation="number_vertices")
        object.__setattr__(self, "ranks", {v: i + 1 for i, v in enumerate(self.order)})

    def __getitem__(self, vertex: str) -> int:
        return self.ranks[vertex]

    def __len__(self) -> int:
        return len(self.order)

    def vertex(self, rank: int) -> str:
        return self.order[rank - 1]

    def oriented(self, u: str, v: str) -> Tuple[int, int]:
        """Edge as (tau, iota) ranks with tau < iota"""
        a, b = self.ranks[u], self.ranks[v]
        return (a, b) if a < b else (b, a)


def spanning_tree(graph: Graph) -> Tuple[Edge, ...]:
    """
    Depth-first spanning tree from the root, following neighbour order

    A flagged disjoint union yields a spanning forest: after the root's
    component, each further component is searched from its first vertex.

    Returns:
        Tree edges as (parent, child) in discovery order
    """
    digraph = graph.to_ordered_digraph()
    tree: List[Edge] = list(nx.dfs_edges(digraph, source=graph.root))
    visited = {graph.root} | {child for _, child in tree}

    if len(visited) < len(graph.vertices):
        if not graph.disjoint_union:
            raise GraphStructureError("Spanning tree requested for a disconnected graph", operation="spanning_tree")
        for start in graph.vertices:
            if start in visited:
                continue
            component = list(nx.dfs_edges(digraph, source=start))
            tree.extend(component)
            visited.add(start)
            visited.update(child for _, child in component)

    return tuple(tree)


def number_vertices(graph: Graph, tree_edges: Iterable[Edge]) -> VertexNumbering:
    """
    Depth-first numbering along a spanning tree; the root gets 1

    Args:
        graph: The graph being numbered
        tree_edges: Spanning tree (or spanning forest of a disjoint union)

    Returns:
        VertexNumbering
    """
    tree_edges = list(tree_edges)
    for u, v in tree_edges:
        if not graph.has_edge(u, v):
            raise GraphStructureError(f"Tree edge {u}-{v} is not an edge of the graph", operation="number_vertices")

    forest = nx.Graph()
    forest.add_nodes_from(graph.vertices)
    forest.add_edges_from(tree_edges)
    if not nx.is_forest(forest):
        raise GraphStructureError("Spanning tree contains a cycle", operation="number_vertices")
    expected = nx.number_connected_components(graph.to_networkx())
    if nx.number_connected_components(forest) != expected:
        raise GraphStructureError("Spanning tree does not span the graph", operation="number_vertices")

    digraph = graph.to_ordered_digraph(allowed=tree_edges)
    order: List[str] = list(nx.dfs_preorder_nodes(digraph, source=graph.root))
    seen = set(order)
    for start in graph.vertices:
        if start not in seen:
            block = list(nx.dfs_preorder_nodes(digraph, source=start))
            order.extend(block)
            seen.update(block)

    return VertexNumbering(order=tuple(order))


def default_numbering(graph: Graph) -> VertexNumbering:
    """Numbering along the canonical DFS spanning tree"""
    return number_vertices(graph, spanning_tree(graph))


def first_betti(graph: Graph) -> int:
    """|E| - |V| + number of connected components"""
    components = nx.number_connected_components(graph.to_networkx())
    return len(graph.edges) - len(graph.vertices) + components


def component_graphs(graph: Graph) -> List[Graph]:
    """
    Connected components as separate graphs, ordered by their first vertex

    The component holding the root keeps it; the others are rooted at
    their first vertex.
    """
    position = {v: i for i, v in enumerate(graph.vertices)}
    blocks = sorted(nx.connected_components(graph.to_networkx()), key=lambda b: min(position[v] for v in b))
    out: List[Graph] = []
    for block in blocks:
        vertices = tuple(v for v in graph.vertices if v in block)
        out.append(Graph(
            vertices=vertices,
            edges=tuple((u, v) for u, v in graph.edges if u in block),
            root=graph.root if graph.root in block else vertices[0],
            neighbor_order={v: graph.neighbor_order[v] for v in vertices},
        ))
    return out


def essential_vertices(graph: Graph) -> List[str]:
    """Vertices of degree at least 3, in vertex order"""
    return [v for v in graph.vertices if graph.degree(v) >= 3]


def cut_vertices(graph: Graph) -> List[str]:
    """Articulation points in vertex order"""
    points = set(nx.articulation_points(graph.to_networkx()))
    return [v for v in graph.vertices if v in points]
