"""
Discrete configuration-space complexes
"""

from .builder import ChainComplex, ComplexBuilder, boundary_of, build_complex, count_cells
from .cells import ORDERED, UNORDERED, Cell, Chain, faces
from .dump import dump_chain, dump_complex
from .invariants import connected_components, disjoint_union_component_count, euler_characteristic, is_closed_surface

__all__ = [
    "Cell",
    "Chain",
    "ChainComplex",
    "ComplexBuilder",
    "ORDERED",
    "UNORDERED",
    "boundary_of",
    "build_complex",
    "connected_components",
    "count_cells",
    "disjoint_union_component_count",
    "dump_chain",
    "dump_complex",
    "euler_characteristic",
    "faces",
    "is_closed_surface",
]
