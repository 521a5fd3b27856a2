"""
Explicit cycle representatives
"""

from .cycle_library import (
    CycleLibrary, CycleSpec, o_chain, o_cycle, shuffle_sign, spans_homology, tensor_product,
    tree_overcomplete_basis, vertex_chain, y_chain, y_cycle
)

__all__ = [
    "CycleLibrary",
    "CycleSpec",
    "o_chain",
    "o_cycle",
    "shuffle_sign",
    "spans_homology",
    "tensor_product",
    "tree_overcomplete_basis",
    "vertex_chain",
    "y_chain",
    "y_cycle",
]
