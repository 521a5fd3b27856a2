#!/usr/bin/env python3
"""
Smith normal form and rank of sparse integer matrices

Elimination runs in two phases. Unit pivots (entries +-1) are taken first
in Markowitz order, shortest column then shortest row; boundary matrices of
cubical complexes have only +-1 entries, so this phase usually does nearly
all the work without any coefficient growth. The remainder is reduced with
minimal-magnitude pivots and repeated division steps, and the resulting
diagonal is normalised into a divisibility chain.
"""

import heapq
import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Literal, Optional, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from ..core.config import INT64_MAX
from ..core.error_handler import ArithmeticOverflowError
from .sparse import SparseIntMatrix

logger = logging.getLogger(__name__)

Arithmetic = Literal["checked", "bigint"]


@dataclass(frozen=True)
class SmithForm:
    """Invariant factors d_1 | d_2 | ... | d_r of an integer matrix"""
    invariant_factors: Tuple[int, ...]
    rows: int
    cols: int

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def torsion(self) -> List[int]:
        return [d for d in self.invariant_factors if d > 1]


class _Elimination:
    """Mutable row and column views of one matrix, kept in sync"""

    def __init__(self, m: SparseIntMatrix, arithmetic: Arithmetic, bound: int):
        if arithmetic not in ("checked", "bigint"):
            raise ValueError(f"Unknown arithmetic mode '{arithmetic}'")
        self.checked = arithmetic == "checked"
        self.bound = bound
        self.cols: Dict[int, Dict[int, int]] = {}
        self.rows: Dict[int, Dict[int, int]] = {}
        for c, column in enumerate(m.columns()):
            if not column:
                continue
            self.cols[c] = column
            for r, v in column.items():
                self._check(v)
                self.rows.setdefault(r, {})[c] = v
        self.diagonal: List[int] = []

    def _check(self, v: int) -> None:
        if self.checked and abs(v) > self.bound:
            raise ArithmeticOverflowError(
                f"Smith form entry of magnitude {abs(v)} exceeds the checked-arithmetic bound {self.bound}",
                bound=self.bound
            )

    def _set(self, r: int, c: int, v: int) -> None:
        if v:
            self._check(v)
            self.rows.setdefault(r, {})[c] = v
            self.cols.setdefault(c, {})[r] = v
        else:
            row = self.rows.get(r)
            if row is not None and c in row:
                del row[c]
                if not row:
                    del self.rows[r]
            col = self.cols.get(c)
            if col is not None and r in col:
                del col[r]
                if not col:
                    del self.cols[c]

    def row_op(self, target: int, source: int, q: int) -> None:
        """row[target] -= q * row[source]"""
        target_row = self.rows.get(target, {})
        for c, v in list(self.rows[source].items()):
            self._set(target, c, target_row.get(c, 0) - q * v)
            target_row = self.rows.get(target, {})

    def col_op(self, target: int, source: int, q: int) -> None:
        """col[target] -= q * col[source]"""
        target_col = self.cols.get(target, {})
        for r, v in list(self.cols[source].items()):
            self._set(r, target, target_col.get(r, 0) - q * v)
            target_col = self.cols.get(target, {})

    def drop(self, r: int, c: int) -> None:
        """Remove a pivot whose column holds nothing else"""
        for c2 in list(self.rows.get(r, {})):
            self._set(r, c2, 0)

    def unit_phase(self) -> int:
        """Eliminate unit pivots until none remain; returns how many were taken"""
        taken = 0
        progress = True
        while progress:
            progress = False
            heap = [(len(col), c) for c, col in self.cols.items()]
            heapq.heapify(heap)
            while heap:
                length, c = heapq.heappop(heap)
                col = self.cols.get(c)
                if not col:
                    continue
                if len(col) != length:
                    heapq.heappush(heap, (len(col), c))
                    continue

                pivot_row: Optional[int] = None
                best = None
                for r, v in col.items():
                    if v == 1 or v == -1:
                        key = (len(self.rows[r]), r)
                        if best is None or key < best:
                            best, pivot_row = key, r
                if pivot_row is None:
                    continue

                p = col[pivot_row]
                touched = set(self.rows[pivot_row])
                for r2, a in list(col.items()):
                    if r2 != pivot_row:
                        self.row_op(r2, pivot_row, a * p)
                # column c now holds only the pivot, so the row can be cleared freely
                self.drop(pivot_row, c)
                self.diagonal.append(1)
                taken += 1
                progress = True
                touched.discard(c)
                for c2 in touched:
                    if c2 in self.cols:
                        heapq.heappush(heap, (len(self.cols[c2]), c2))
        return taken

    def _pick_pivot(self) -> Tuple[int, int]:
        best = None
        for c, col in self.cols.items():
            for r, v in col.items():
                key = (abs(v), len(self.rows[r]) + len(col), c, r)
                if best is None or key < best:
                    best = key
        return best[3], best[2]

    def remainder_phase(self) -> None:
        while self.cols:
            r, c = self._pick_pivot()
            while True:
                p = self.cols[c][r]
                for r2, a in list(self.cols[c].items()):
                    if r2 != r:
                        self.row_op(r2, r, a // p)
                for c2, a in list(self.rows[r].items()):
                    if c2 != c:
                        self.col_op(c2, c, a // p)

                leftovers = [(abs(v), r2, c) for r2, v in self.cols[c].items() if r2 != r]
                leftovers += [(abs(v), r, c2) for c2, v in self.rows[r].items() if c2 != c]
                if not leftovers:
                    self.diagonal.append(abs(p))
                    self.drop(r, c)
                    break
                _, r, c = min(leftovers)

    def normalised_diagonal(self) -> Tuple[int, ...]:
        d = sorted(self.diagonal)
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                if d[j] % d[i]:
                    g = math.gcd(d[i], d[j])
                    lcm = d[i] // g * d[j]
                    self._check(lcm)
                    d[i], d[j] = g, lcm
        return tuple(d)


def smith_normal_form(
    m: SparseIntMatrix,
    arithmetic: Arithmetic = "checked",
    bound: int = INT64_MAX
) -> SmithForm:
    """
    Invariant factors of an integer matrix

    Args:
        m: Matrix to reduce
        arithmetic: "checked" raises ArithmeticOverflowError when an entry
            exceeds the bound; "bigint" lets Python integers grow
        bound: Largest magnitude allowed in checked mode

    Returns:
        SmithForm with factors in divisibility order
    """
    work = _Elimination(m, arithmetic, bound)
    units = work.unit_phase()
    remaining = len(work.cols)
    work.remainder_phase()
    factors = work.normalised_diagonal()
    logger.debug(
        f"Smith form of {m.rows}x{m.cols} matrix: {units} unit pivots, "
        f"{remaining} columns left for division steps, rank {len(factors)}"
    )
    return SmithForm(invariant_factors=factors, rows=m.rows, cols=m.cols)


def matrix_rank(m: SparseIntMatrix) -> int:
    """
    Rank over the rationals

    Unit pivots are eliminated exactly; the rank of what remains is taken
    from a sympy DomainMatrix over QQ.
    """
    work = _Elimination(m, "bigint", INT64_MAX)
    units = work.unit_phase()
    if not work.cols:
        return units

    row_ids = {r: i for i, r in enumerate(sorted(work.rows))}
    col_ids = {c: j for j, c in enumerate(sorted(work.cols))}
    data = {
        row_ids[r]: {col_ids[c]: QQ(v) for c, v in row.items()}
        for r, row in work.rows.items()
    }
    remainder = DomainMatrix(data, (len(row_ids), len(col_ids)), QQ)
    return units + remainder.rank()
