#!/usr/bin/env python3
"""
Sufficient subdivision of graphs for n particles

A graph is sufficiently subdivided for n particles when every path between
distinct vertices of degree other than 2 has at least n - 1 edges and every
cycle has at least n + 1 edges. Under these conditions the discrete
configuration space is homotopy equivalent to the continuous one.
"""

import math
from dataclasses import dataclass
from typing import Dict, List, Optional

import networkx as nx

from ..core.error_handler import GraphStructureError
from .graph import Edge, Graph


@dataclass(frozen=True)
class SufficiencyViolation:
    """One failed sufficiency condition"""
    condition: str  # "branch-path" or "cycle"
    shortest: int
    required: int

    def describe(self) -> str:
        if self.condition == "branch-path":
            return (
                f"a path between branch or leaf vertices has {self.shortest} edges, "
                f"at least {self.required} needed"
            )
        return f"a cycle has {self.shortest} edges, at least {self.required} needed"


def shortest_branch_path(graph: Graph) -> Optional[int]:
    """
    Length of the shortest path between distinct vertices of degree != 2
    whose interior vertices all have degree 2

    Every path between distinct such vertices contains one of these
    segments, so the minimum over segments bounds all of them.

    Returns:
        Edge count, or None when no such path exists
    """
    best: Optional[int] = None
    for start in graph.vertices:
        if graph.degree(start) == 2:
            continue
        for first in graph.neighbors(start):
            previous, current, length = start, first, 1
            while graph.degree(current) == 2 and current != start:
                a, b = graph.neighbors(current)
                previous, current = current, (b if a == previous else a)
                length += 1
            if current != start and (best is None or length < best):
                best = length
    return best


def girth(graph: Graph) -> Optional[int]:
    """Length of the shortest cycle, or None for forests"""
    value = nx.girth(graph.to_networkx())
    return None if math.isinf(value) else int(value)


def sufficiency_violations(graph: Graph, n: int) -> List[SufficiencyViolation]:
    """List the sufficiency conditions the graph fails for n particles"""
    violations: List[SufficiencyViolation] = []
    path = shortest_branch_path(graph)
    if path is not None and path < n - 1:
        violations.append(SufficiencyViolation("branch-path", path, n - 1))
    cycle = girth(graph)
    if cycle is not None and cycle < n + 1:
        violations.append(SufficiencyViolation("cycle", cycle, n + 1))
    return violations


def is_sufficiently_subdivided(graph: Graph, n: int) -> bool:
    return not sufficiency_violations(graph, n)


def required_segments(graph: Graph, n: int) -> int:
    """Uniform number of segments per edge that makes the graph sufficient for n"""
    segments = 1
    path = shortest_branch_path(graph)
    if path is not None and n - 1 > 0:
        segments = max(segments, math.ceil((n - 1) / path))
    cycle = girth(graph)
    if cycle is not None:
        segments = max(segments, math.ceil((n + 1) / cycle))
    return segments


def _fresh_name(base: str, taken: set) -> str:
    name = base
    while name in taken:
        name += "'"
    taken.add(name)
    return name


def subdivide_edges(graph: Graph, segments: int) -> Graph:
    """
    Split every edge into the given number of segments

    Edge (u, v) receives interior vertices named "u.v.1" .. "u.v.(s-1)"
    walking from u to v. Each endpoint keeps the position of the old
    neighbour in its neighbour order.
    """
    if segments < 1:
        raise GraphStructureError(f"Segment count must be positive, got {segments}", operation="subdivide")
    if segments == 1:
        return graph

    taken = set(graph.vertices)
    vertices: List[str] = list(graph.vertices)
    edges: List[Edge] = []
    order: Dict[str, List[str]] = {v: list(graph.neighbor_order[v]) for v in graph.vertices}

    for u, v in graph.edges:
        chain = [u] + [_fresh_name(f"{u}.{v}.{i}", taken) for i in range(1, segments)] + [v]
        vertices.extend(chain[1:-1])
        for a, b in zip(chain, chain[1:]):
            edges.append((a, b))
        order[u][order[u].index(v)] = chain[1]
        order[v][order[v].index(u)] = chain[-2]
        for i in range(1, segments):
            order[chain[i]] = [chain[i - 1], chain[i + 1]]

    return Graph(
        vertices=tuple(vertices),
        edges=tuple(edges),
        root=graph.root,
        neighbor_order={v: tuple(ns) for v, ns in order.items()},
        disjoint_union=graph.disjoint_union,
    )


def subdivide_for(graph: Graph, n: int) -> Graph:
    """
    Return a homeomorphic graph that is sufficiently subdivided for n particles

    Already sufficient graphs are returned unchanged.
    """
    if n < 0:
        raise GraphStructureError(f"Particle count must be non-negative, got {n}", operation="subdivide_for")
    return subdivide_edges(graph, required_segments(graph, n))
