"""
Graph model, subdivision and decompositions
"""

from .decomposition import (
    OneConnectedSplit, StarSubgraph, TreeShape, find_single_edge_split, split_at_cut_vertex, tree_from_shape,
    tree_shape
)
from .graph import (
    Graph, VertexNumbering, component_graphs, cut_vertices, default_numbering, essential_vertices,
    first_betti, number_vertices, spanning_tree
)
from .subdivision import (
    SufficiencyViolation, is_sufficiently_subdivided, required_segments, subdivide_edges, subdivide_for,
    sufficiency_violations
)

__all__ = [
    "Graph",
    "OneConnectedSplit",
    "StarSubgraph",
    "SufficiencyViolation",
    "TreeShape",
    "VertexNumbering",
    "component_graphs",
    "cut_vertices",
    "default_numbering",
    "essential_vertices",
    "find_single_edge_split",
    "first_betti",
    "is_sufficiently_subdivided",
    "number_vertices",
    "required_segments",
    "spanning_tree",
    "split_at_cut_vertex",
    "subdivide_edges",
    "subdivide_for",
    "sufficiency_violations",
    "tree_from_shape",
    "tree_shape",
]
