#!/usr/bin/env python3
"""
Combinatorial invariants of configuration-space complexes
"""

import itertools
import math
from typing import List

import networkx as nx

from ..graphs.graph import Graph, component_graphs
from .builder import ChainComplex, build_complex
from .cells import FLAVORS, ORDERED, UNORDERED


def euler_characteristic(complex_: ChainComplex) -> int:
    """Alternating sum of the cell counts"""
    return sum((-1) ** k * count for k, count in enumerate(complex_.cell_counts))


def one_skeleton(complex_: ChainComplex) -> nx.Graph:
    """0-cells as nodes (by index), 1-cells as edges"""
    skeleton = nx.Graph()
    skeleton.add_nodes_from(range(len(complex_.cells(0))))
    if complex_.top_dimension >= 1:
        for column in complex_.boundary_matrix(1).columns():
            skeleton.add_edge(*column.keys())
    return skeleton


def connected_components(complex_: ChainComplex) -> int:
    """Number of connected components of the 1-skeleton"""
    if not complex_.cells(0):
        return 0
    return nx.number_connected_components(one_skeleton(complex_))


def is_closed_surface(complex_: ChainComplex) -> bool:
    """
    True when the complex is a connected 2-dimensional complex whose every
    1-cell is a face of exactly two 2-cells
    """
    if complex_.top_dimension != 2:
        return False
    incidence = [0] * len(complex_.cells(1))
    for column in complex_.boundary_matrix(2).columns():
        for row in column:
            incidence[row] += 1
    if any(count != 2 for count in incidence):
        return False
    return connected_components(complex_) == 1


def disjoint_union_component_count(graph: Graph, n: int, flavor: str = UNORDERED) -> int:
    """
    Component count of the configuration space of a disjoint union

    Sums, over every distribution (k_1, ..., k_r) of the particles among the
    graph components, the product of the component counts of the factor
    spaces. Ordered spaces also pick which labels go to which component,
    giving a multinomial factor per distribution.
    """
    if flavor not in FLAVORS:
        raise ValueError(f"Unknown flavor '{flavor}', expected one of {FLAVORS}")
    parts = component_graphs(graph)
    table: List[List[int]] = [
        [connected_components(build_complex(part, k, flavor)) for k in range(n + 1)]
        for part in parts
    ]

    total = 0
    for split in itertools.product(range(n + 1), repeat=len(parts)):
        if sum(split) != n:
            continue
        term = math.prod(table[i][k] for i, k in enumerate(split))
        if flavor == ORDERED:
            term *= math.factorial(n) // math.prod(math.factorial(k) for k in split)
        total += term
    return total
