#!/usr/bin/env python3
"""
Sparse integer matrices stored column-wise
"""

from typing import Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple


class SparseIntMatrix:
    """
    Exact integer matrix with dict-of-dicts column storage

    Zero values are never stored. Duplicate (row, col) entries are rejected.
    """

    __slots__ = ("rows", "cols", "_columns")

    def __init__(self, rows: int, cols: int, entries: Iterable[Tuple[int, int, int]] = ()):
        if rows < 0 or cols < 0:
            raise ValueError(f"Matrix shape must be non-negative, got {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        self._columns: List[Dict[int, int]] = [dict() for _ in range(cols)]
        for r, c, v in entries:
            if not (0 <= r < rows and 0 <= c < cols):
                raise ValueError(f"Entry ({r}, {c}) outside {rows}x{cols} matrix")
            if r in self._columns[c]:
                raise ValueError(f"Duplicate entry at ({r}, {c})")
            if v:
                self._columns[c][r] = int(v)

    @classmethod
    def from_columns(cls, rows: int, columns: Sequence[Mapping[int, int]]) -> "SparseIntMatrix":
        m = cls(rows, len(columns))
        for c, column in enumerate(columns):
            for r, v in column.items():
                if not 0 <= r < rows:
                    raise ValueError(f"Row {r} outside matrix with {rows} rows")
                if v:
                    m._columns[c][r] = int(v)
        return m

    @classmethod
    def from_dense(cls, data: Sequence[Sequence[int]], cols: int = None) -> "SparseIntMatrix":
        rows = len(data)
        width = cols if cols is not None else (len(data[0]) if rows else 0)
        return cls(rows, width, (
            (r, c, v) for r, row in enumerate(data) for c, v in enumerate(row) if v
        ))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "SparseIntMatrix":
        return cls(rows, cols)

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def nnz(self) -> int:
        return sum(len(column) for column in self._columns)

    def column(self, c: int) -> Dict[int, int]:
        return dict(self._columns[c])

    def columns(self) -> List[Dict[int, int]]:
        return [dict(column) for column in self._columns]

    def entries(self) -> Iterator[Tuple[int, int, int]]:
        """(row, col, value) triplets sorted by column, then row"""
        for c, column in enumerate(self._columns):
            for r in sorted(column):
                yield (r, c, column[r])

    def to_dense(self) -> List[List[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for r, c, v in self.entries():
            out[r][c] = v
        return out

    def transpose(self) -> "SparseIntMatrix":
        return SparseIntMatrix(self.cols, self.rows, ((c, r, v) for r, c, v in self.entries()))

    def matmul(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        result: List[Dict[int, int]] = []
        for column in other._columns:
            acc: Dict[int, int] = {}
            for k, b in column.items():
                for r, a in self._columns[k].items():
                    acc[r] = acc.get(r, 0) + a * b
            result.append({r: v for r, v in acc.items() if v})
        return SparseIntMatrix.from_columns(self.rows, result)

    def __matmul__(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        return self.matmul(other)

    def is_zero(self) -> bool:
        return all(not column for column in self._columns)

    def hstack(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        """Append the columns of another matrix with the same row count"""
        if other.rows != self.rows:
            raise ValueError(f"Row counts differ: {self.rows} and {other.rows}")
        return SparseIntMatrix.from_columns(self.rows, self._columns + other._columns)

    def permuted(self, row_perm: Sequence[int], col_perm: Sequence[int]) -> "SparseIntMatrix":
        """Move row r to row_perm[r] and column c to col_perm[c]"""
        if sorted(row_perm) != list(range(self.rows)) or sorted(col_perm) != list(range(self.cols)):
            raise ValueError("Permutations must be bijections onto the index ranges")
        return SparseIntMatrix(
            self.rows, self.cols, ((row_perm[r], col_perm[c], v) for r, c, v in self.entries())
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseIntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._columns == other._columns

    def __repr__(self) -> str:
        return f"SparseIntMatrix({self.rows}x{self.cols}, nnz={self.nnz})"
