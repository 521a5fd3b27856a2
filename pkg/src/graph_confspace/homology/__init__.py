"""
Exact integer homology
"""

from .homology import HomologyCalculator, HomologyResult, betti_vector, homology
from .smith import SmithForm, matrix_rank, smith_normal_form
from .sparse import SparseIntMatrix

__all__ = [
    "HomologyCalculator",
    "HomologyResult",
    "SmithForm",
    "SparseIntMatrix",
    "betti_vector",
    "homology",
    "matrix_rank",
    "smith_normal_form",
]
