#!/usr/bin/env python3
"""
Structural decompositions: one-connected splits and tree shapes
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from ..core.error_handler import GraphStructureError
from .graph import Edge, Graph, cut_vertices, essential_vertices, first_betti


@dataclass(frozen=True)
class OneConnectedSplit:
    """
    Components of a graph wedged at a cut vertex

    components[i] contains the cut vertex, reached through the once
    subdivided connecting edges; trimmed_components[i] drops the last
    segment of each connecting edge and so avoids the cut vertex.
    """
    cut_vertex: str
    components: Tuple[Graph, ...]
    trimmed_components: Tuple[Graph, ...]
    attachment_counts: Tuple[int, ...]

    @property
    def trim_losses(self) -> Tuple[int, ...]:
        """mu_i = beta_1(component) - beta_1(trimmed component)"""
        return tuple(
            first_betti(whole) - first_betti(trimmed)
            for whole, trimmed in zip(self.components, self.trimmed_components)
        )


def _fresh(base: str, taken: set) -> str:
    name = base
    while name in taken:
        name += "'"
    taken.add(name)
    return name


def split_at_cut_vertex(graph: Graph, v: str) -> OneConnectedSplit:
    """
    Split a graph at a cut vertex into its wedge components

    Args:
        graph: Graph containing the cut vertex
        v: The cut vertex

    Returns:
        OneConnectedSplit with components ordered by first vertex appearance
    """
    if v not in graph.neighbor_order:
        raise GraphStructureError(f"{v} is not a vertex", operation="split_at_cut_vertex")

    whole = graph.to_networkx()
    remainder = whole.copy()
    remainder.remove_node(v)
    attached = [
        c for c in nx.connected_components(remainder)
        if any(x in c for x in graph.neighbors(v))
    ]
    if len(attached) < 2:
        raise GraphStructureError(f"{v} is not a cut vertex", operation="split_at_cut_vertex")

    position = {w: i for i, w in enumerate(graph.vertices)}
    attached.sort(key=lambda c: min(position[w] for w in c))

    taken = set(graph.vertices)
    midpoint: Dict[str, str] = {}
    for a, b in graph.edges:
        if v in (a, b):
            x = b if a == v else a
            midpoint[x] = _fresh(f"{a}.{b}.1", taken)

    components: List[Graph] = []
    trimmed: List[Graph] = []
    counts: List[int] = []
    for block in attached:
        inner_vertices = [w for w in graph.vertices if w in block]
        inner_edges = [(a, b) for a, b in graph.edges if a in block and b in block]
        connectors = [x for x in graph.neighbors(v) if x in block]
        counts.append(len(connectors))

        order: Dict[str, Tuple[str, ...]] = {}
        for w in inner_vertices:
            order[w] = tuple(midpoint[w] if u == v else u for u in graph.neighbor_order[w] if u == v or u in block)
        stubs: List[Edge] = []
        for a, b in graph.edges:
            if a == v and b in block:
                stubs.append((midpoint[b], b))
            elif b == v and a in block:
                stubs.append((a, midpoint[a]))

        trimmed_order = dict(order)
        for x in connectors:
            trimmed_order[midpoint[x]] = (x,)
        trimmed_root = graph.root if graph.root in block else inner_vertices[0]
        trimmed.append(Graph(
            vertices=tuple(inner_vertices) + tuple(midpoint[x] for x in connectors),
            edges=tuple(inner_edges) + tuple(stubs),
            root=trimmed_root,
            neighbor_order=trimmed_order,
        ))

        full_order = dict(order)
        for x in connectors:
            full_order[midpoint[x]] = (x, v)
        full_order[v] = tuple(midpoint[x] for x in connectors)
        components.append(Graph(
            vertices=tuple(inner_vertices) + tuple(midpoint[x] for x in connectors) + (v,),
            edges=tuple(inner_edges) + tuple(stubs) + tuple((midpoint[x], v) for x in connectors),
            root=graph.root if graph.root in block or graph.root == v else inner_vertices[0],
            neighbor_order=full_order,
        ))

    return OneConnectedSplit(
        cut_vertex=v,
        components=tuple(components),
        trimmed_components=tuple(trimmed),
        attachment_counts=tuple(counts),
    )


def _subdivide_edge_once(graph: Graph, edge: Edge) -> Tuple[Graph, str]:
    a, b = edge
    mid = _fresh(f"{a}.{b}.1", set(graph.vertices))
    edges: List[Edge] = []
    for u, w in graph.edges:
        if {u, w} == {a, b}:
            edges.extend([(u, mid), (mid, w)])
        else:
            edges.append((u, w))
    order = {v: tuple(ns) for v, ns in graph.neighbor_order.items()}
    order[a] = tuple(mid if u == b else u for u in order[a])
    order[b] = tuple(mid if u == a else u for u in order[b])
    order[mid] = (a, b)
    return Graph(
        vertices=graph.vertices + (mid,),
        edges=tuple(edges),
        root=graph.root,
        neighbor_order=order,
        disjoint_union=graph.disjoint_union,
    ), mid


def find_single_edge_split(graph: Graph) -> Optional[OneConnectedSplit]:
    """
    Locate a decomposition of the graph into two parts joined by one edge

    A degree-2 cut vertex is used directly; otherwise the first bridge whose
    endpoints both have degree at least 2 is subdivided once and split at
    its midpoint.

    Returns:
        The split, or None when the graph has no such join
    """
    for v in cut_vertices(graph):
        if graph.degree(v) == 2:
            return split_at_cut_vertex(graph, v)

    g = graph.to_networkx()
    bridges = {frozenset(e) for e in nx.bridges(g)}
    for a, b in graph.edges:
        if frozenset((a, b)) in bridges and graph.degree(a) >= 2 and graph.degree(b) >= 2:
            refined, mid = _subdivide_edge_once(graph, (a, b))
            return split_at_cut_vertex(refined, mid)
    return None


@dataclass(frozen=True)
class StarSubgraph:
    """Star subgraph of a tree: a hub and its full degree"""
    hub: str
    degree: int


@dataclass(frozen=True)
class TreeShape:
    """Tree described by its star subgraphs and the adjacency between hubs"""
    stars: Tuple[StarSubgraph, ...]
    star_adjacency: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        for star in self.stars:
            if star.degree < 3:
                raise GraphStructureError(
                    f"Hub {star.hub} has degree {star.degree}, stars need degree >= 3",
                    operation="tree_shape"
                )
        if self.stars:
            scheme = nx.Graph()
            scheme.add_nodes_from(range(len(self.stars)))
            scheme.add_edges_from(self.star_adjacency)
            if scheme.number_of_nodes() != len(self.stars) or not nx.is_tree(scheme):
                raise GraphStructureError("Star adjacency must be a tree", operation="tree_shape")
        elif self.star_adjacency:
            raise GraphStructureError("Star adjacency given without stars", operation="tree_shape")

    @classmethod
    def from_degrees(cls, degrees: Sequence[int]) -> "TreeShape":
        """Caterpillar-shaped tree with hubs h1, h2, ... of the given degrees"""
        stars = tuple(StarSubgraph(hub=f"h{i + 1}", degree=int(d)) for i, d in enumerate(degrees))
        adjacency = tuple((i, i + 1) for i in range(len(stars) - 1))
        return cls(stars=stars, star_adjacency=adjacency)

    @property
    def degrees(self) -> List[int]:
        return [star.degree for star in self.stars]

    def peel_order(self) -> List[StarSubgraph]:
        """
        Stars ordered so each one is a leaf of the adjacency left after
        removing its predecessors
        """
        scheme = nx.Graph()
        scheme.add_nodes_from(range(len(self.stars)))
        scheme.add_edges_from(self.star_adjacency)
        order: List[StarSubgraph] = []
        while scheme.number_of_nodes():
            leaf = min(i for i in scheme.nodes if scheme.degree(i) <= 1)
            order.append(self.stars[leaf])
            scheme.remove_node(leaf)
        return order


def tree_shape(tree: Graph) -> TreeShape:
    """
    Read the star structure of a tree

    Two hubs are adjacent when the path joining them has no other essential
    vertex.
    """
    if not nx.is_tree(tree.to_networkx()):
        raise GraphStructureError("tree_shape needs a tree; the input has a cycle or is disconnected",
                                  operation="tree_shape")

    hubs = essential_vertices(tree)
    index = {hub: i for i, hub in enumerate(hubs)}
    adjacency = set()
    for hub in hubs:
        for first in tree.neighbors(hub):
            previous, current = hub, first
            while tree.degree(current) == 2:
                a, b = tree.neighbors(current)
                previous, current = current, (b if a == previous else a)
            if current in index and current != hub:
                i, j = index[hub], index[current]
                adjacency.add((min(i, j), max(i, j)))

    return TreeShape(
        stars=tuple(StarSubgraph(hub=h, degree=tree.degree(h)) for h in hubs),
        star_adjacency=tuple(sorted(adjacency)),
    )


def tree_from_shape(shape: TreeShape) -> Graph:
    """
    Smallest tree realising a shape: adjacent hubs share an edge and every
    hub is topped up with leaves "<hub>.leaf<i>" to its degree
    """
    if not shape.stars:
        raise GraphStructureError("Shape has no stars", operation="tree_from_shape")
    hubs = [star.hub for star in shape.stars]
    edges: List[Edge] = [(hubs[i], hubs[j]) for i, j in shape.star_adjacency]
    for i, star in enumerate(shape.stars):
        inner = sum(1 for a, b in shape.star_adjacency if i in (a, b))
        if inner > star.degree:
            raise GraphStructureError(
                f"Hub {star.hub} has {inner} neighbouring hubs but degree {star.degree}",
                operation="tree_from_shape"
            )
        edges.extend((star.hub, f"{star.hub}.leaf{k + 1}") for k in range(star.degree - inner))
    return Graph.from_edges(edges, root=hubs[0])
