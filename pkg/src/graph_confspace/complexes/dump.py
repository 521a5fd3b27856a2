#!/usr/bin/env python3
"""
JSON-ready dumps of complexes and chains

Cells are written with graph vertex names; boundary triplets are sorted
by column, then row, so dumps of the same complex are byte-identical.
"""

from typing import Any, Dict

from .builder import ChainComplex
from .cells import Chain


def dump_complex(complex_: ChainComplex) -> Dict[str, Any]:
    numbering = complex_.numbering
    return {
        "particles": complex_.particles,
        "flavor": complex_.flavor,
        "numbering": list(numbering.order),
        "cell_counts": complex_.cell_counts,
        "cells": [
            [cell.describe(numbering) for cell in complex_.cells(k)]
            for k in range(complex_.top_dimension + 1)
        ],
        "boundaries": [
            {
                "dimension": k,
                "rows": complex_.boundary_matrix(k).rows,
                "cols": complex_.boundary_matrix(k).cols,
                "triplets": [list(t) for t in complex_.boundary_matrix(k).entries()],
            }
            for k in range(1, complex_.top_dimension + 1)
        ],
    }


def dump_chain(chain: Chain, complex_: ChainComplex) -> Dict[str, Any]:
    indexed = chain.indexed(complex_)
    cells = complex_.cells(chain.dimension)
    return {
        "dimension": chain.dimension,
        "terms": [
            {"index": i, "cell": cells[i].describe(complex_.numbering), "coefficient": indexed[i]}
            for i in sorted(indexed)
        ],
    }
