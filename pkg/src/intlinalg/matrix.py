"""
Sparse Integer Matrix

Handles exact integer matrices stored as a map from (row, col) to nonzero
arbitrary-precision integers.
"""

import logging
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

logger = logging.getLogger(__name__)

Entry = Tuple[int, int]


class IntMatrix:
    """
    Exact integer matrix with sparse storage.

    Features:
    - Only nonzero entries are stored
    - Index bounds checked on every write
    - Sparse row export for the Smith normal form kernel
    - Column-wise access for relation matrices built one relation at a time
    """

    __slots__ = ('rows', 'cols', '_entries')

    def __init__(self, rows: int, cols: int, entries: Optional[Dict[Entry, int]] = None):
        if rows < 0 or cols < 0:
            raise ValueError(f"Matrix shape must be nonnegative, got {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        self._entries: Dict[Entry, int] = {}
        if entries:
            for (i, j), value in entries.items():
                self[i, j] = value

    @classmethod
    def from_dense(cls, dense: List[List[int]]) -> 'IntMatrix':
        """Build from a list of rows (all rows of equal length)."""
        rows = len(dense)
        cols = len(dense[0]) if rows else 0
        matrix = cls(rows, cols)
        for i, row in enumerate(dense):
            if len(row) != cols:
                raise ValueError("Ragged rows in dense matrix")
            for j, value in enumerate(row):
                if value:
                    matrix._entries[(i, j)] = int(value)
        return matrix

    @classmethod
    def from_columns(cls, rows: int, columns: Iterable[Dict[int, int]]) -> 'IntMatrix':
        """
        Build a matrix whose j-th column is the j-th sparse vector.

        Args:
            rows: Number of rows (generator count)
            columns: Sparse column vectors mapping row index to value

        Returns:
            IntMatrix with one column per supplied vector
        """
        matrix = cls(rows, 0)
        for column in columns:
            j = matrix.cols
            matrix.cols += 1
            for i, value in column.items():
                if value:
                    matrix[i, j] = value
        return matrix

    @classmethod
    def identity(cls, size: int) -> 'IntMatrix':
        return cls(size, size, {(i, i): 1 for i in range(size)})

    def _check(self, i: int, j: int) -> None:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"Entry ({i}, {j}) outside {self.rows}x{self.cols}")

    def __getitem__(self, key: Entry) -> int:
        self._check(*key)
        return self._entries.get(key, 0)

    def __setitem__(self, key: Entry, value: int) -> None:
        self._check(*key)
        value = int(value)
        if value:
            self._entries[key] = value
        else:
            self._entries.pop(key, None)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return (self.rows, self.cols, self._entries) == (other.rows, other.cols, other._entries)

    def __repr__(self) -> str:
        return f"IntMatrix({self.rows}x{self.cols}, nnz={self.nnz})"

    @property
    def nnz(self) -> int:
        return len(self._entries)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def items(self) -> Iterator[Tuple[Entry, int]]:
        """Nonzero entries in row-major order."""
        for key in sorted(self._entries):
            yield key, self._entries[key]

    def to_dense(self) -> List[List[int]]:
        dense = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), value in self._entries.items():
            dense[i][j] = value
        return dense

    def column(self, j: int) -> Dict[int, int]:
        return {i: v for (i, jj), v in self._entries.items() if jj == j}

    def row_dicts(self) -> List[Dict[int, int]]:
        rows: List[Dict[int, int]] = [{} for _ in range(self.rows)]
        for (i, j), value in self._entries.items():
            rows[i][j] = value
        return rows

    def columns(self) -> List[Dict[int, int]]:
        cols: List[Dict[int, int]] = [{} for _ in range(self.cols)]
        for (i, j), value in self._entries.items():
            cols[j][i] = value
        return cols

    def transpose(self) -> 'IntMatrix':
        return IntMatrix(self.cols, self.rows, {(j, i): v for (i, j), v in self._entries.items()})

    def permuted(self, row_perm: List[int], col_perm: List[int]) -> 'IntMatrix':
        """Matrix with entry (i, j) moved to (row_perm[i], col_perm[j])."""
        return IntMatrix(self.rows, self.cols,
                         {(row_perm[i], col_perm[j]): v for (i, j), v in self._entries.items()})

    def hstack(self, other: 'IntMatrix') -> 'IntMatrix':
        if other.rows != self.rows:
            raise ValueError("Row counts differ in hstack")
        entries = dict(self._entries)
        entries.update({(i, j + self.cols): v for (i, j), v in other._entries.items()})
        return IntMatrix(self.rows, self.cols + other.cols, entries)

    def __matmul__(self, other: 'IntMatrix') -> 'IntMatrix':
        if self.cols != other.rows:
            raise ValueError(f"Shape mismatch {self.shape} @ {other.shape}")
        by_row: Dict[int, List[Tuple[int, int]]] = {}
        for (k, j), v in other._entries.items():
            by_row.setdefault(k, []).append((j, v))
        out: Dict[Entry, int] = {}
        for (i, k), a in self._entries.items():
            for j, b in by_row.get(k, ()):
                out[(i, j)] = out.get((i, j), 0) + a * b
        return IntMatrix(self.rows, other.cols, {key: v for key, v in out.items() if v})

    def apply(self, vector: Dict[int, int]) -> Dict[int, int]:
        """Multiply by a sparse column vector."""
        out: Dict[int, int] = {}
        for (i, j), v in self._entries.items():
            x = vector.get(j)
            if x:
                out[i] = out.get(i, 0) + v * x
        return {i: v for i, v in out.items() if v}
