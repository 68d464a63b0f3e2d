"""
Smith Normal Form

Handles diagonalization of integer matrices by unimodular row and column
operations, with the divisor chain d_1 | d_2 | ... | d_r.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from core.errors import ResourceCapError

from .matrix import IntMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SnfResult:
    """
    Result of a Smith normal form computation.

    U @ M @ V equals the diagonal of `diagonal` padded with zeros. U and V are
    None when transforms were not requested.
    """
    diagonal: Tuple[int, ...]
    U: Optional[IntMatrix]
    V: Optional[IntMatrix]
    rows: int
    cols: int

    @property
    def rank(self) -> int:
        return len(self.diagonal)

    def padded(self) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, {(i, i): d for i, d in enumerate(self.diagonal)})


def check_capacity(matrix: IntMatrix, cap: Optional[int], what: str = 'relation matrix') -> None:
    """Raise ResourceCapError when the matrix holds more nonzeros than allowed."""
    if cap is not None and matrix.nnz > cap:
        raise ResourceCapError(
            f"{what} has {matrix.nnz} nonzero entries, above the cap of {cap}",
            {'nonzeros': matrix.nnz, 'cap': cap, 'shape': list(matrix.shape)},
        )


Row = Dict[int, int]


def _swap_rows(a: List[Row], i: int, k: int) -> None:
    if i != k:
        a[i], a[k] = a[k], a[i]


def _swap_cols(a: List[Row], j: int, k: int) -> None:
    if j == k:
        return
    for row in a:
        vj = row.pop(j, 0)
        vk = row.pop(k, 0)
        if vj:
            row[k] = vj
        if vk:
            row[j] = vk


def _add_row(a: List[Row], target: int, source: int, factor: int) -> None:
    """row[target] += factor * row[source]"""
    dst = a[target]
    for c, v in a[source].items():
        nv = dst.get(c, 0) + factor * v
        if nv:
            dst[c] = nv
        else:
            dst.pop(c, None)


def _add_col(a: List[Row], target: int, source: int, factor: int) -> None:
    """col[target] += factor * col[source]"""
    for row in a:
        v = row.get(source)
        if v:
            nv = row.get(target, 0) + factor * v
            if nv:
                row[target] = nv
            else:
                row.pop(target, None)


def _min_pivot(a: List[Row], t: int) -> Optional[Tuple[int, int]]:
    best = None
    best_abs = 0
    for i in range(t, len(a)):
        for j, v in a[i].items():
            if j >= t and (best is None or abs(v) < best_abs):
                best, best_abs = (i, j), abs(v)
                if best_abs == 1:
                    return best
    return best


def _identity_rows(size: int) -> List[Row]:
    return [{i: 1} for i in range(size)]


def smith_normal_form(matrix: IntMatrix, transforms: bool = True,
                      max_nonzeros: Optional[int] = None) -> SnfResult:
    """
    Compute the Smith normal form of an integer matrix.

    Rows are kept as sparse dicts throughout; only nonzero entries are visited
    by pivot search and elimination.

    Args:
        matrix: Matrix to diagonalize
        transforms: Whether to track the unimodular transforms U and V
        max_nonzeros: Optional cap on the nonzero count of the input

    Returns:
        SnfResult with positive divisors d_1 | ... | d_r
    """
    check_capacity(matrix, max_nonzeros)
    m, n = matrix.shape
    a = matrix.row_dicts()
    # U acts on rows; Vt is the transpose of V so column operations become row operations
    u = _identity_rows(m) if transforms else None
    vt = _identity_rows(n) if transforms else None

    t = 0
    while t < min(m, n):
        pivot = _min_pivot(a, t)
        if pivot is None:
            break
        pi, pj = pivot
        _swap_rows(a, t, pi)
        _swap_cols(a, t, pj)
        if transforms:
            _swap_rows(u, t, pi)
            _swap_rows(vt, t, pj)

        while True:
            p = a[t][t]
            clean = True
            for i in range(t + 1, m):
                x = a[i].get(t)
                if x:
                    q = x // p
                    _add_row(a, i, t, -q)
                    if transforms:
                        _add_row(u, i, t, -q)
                    if a[i].get(t):
                        clean = False
            for j in sorted(c for c in a[t] if c > t):
                x = a[t].get(j)
                if x:
                    q = x // p
                    _add_col(a, j, t, -q)
                    if transforms:
                        _add_row(vt, j, t, -q)
                    if a[t].get(j):
                        clean = False
            if not clean:
                # a remainder smaller than the pivot survived; make it the pivot
                best = None
                best_abs = 0
                for i in range(t + 1, m):
                    x = a[i].get(t)
                    if x and (best is None or abs(x) < best_abs):
                        best, best_abs = (i, t), abs(x)
                for j, x in a[t].items():
                    if j > t and (best is None or abs(x) < best_abs):
                        best, best_abs = (t, j), abs(x)
                bi, bj = best
                _swap_rows(a, t, bi)
                _swap_cols(a, t, bj)
                if transforms:
                    _swap_rows(u, t, bi)
                    _swap_rows(vt, t, bj)
                continue

            offender = None
            for i in range(t + 1, m):
                if any(v % p for j, v in a[i].items() if j > t):
                    offender = i
                    break
            if offender is None:
                break
            _add_row(a, t, offender, 1)
            if transforms:
                _add_row(u, t, offender, 1)

        if a[t][t] < 0:
            a[t] = {c: -v for c, v in a[t].items()}
            if transforms:
                u[t] = {c: -v for c, v in u[t].items()}
        t += 1

    diagonal = tuple(a[i][i] for i in range(t))
    logger.debug(f"SNF of {m}x{n} matrix: rank {t}, divisors {diagonal[-3:]}")
    if not transforms:
        return SnfResult(diagonal, None, None, m, n)
    return SnfResult(
        diagonal,
        IntMatrix(m, m, {(i, c): v for i, row in enumerate(u) for c, v in row.items()}),
        IntMatrix(n, n, {(c, i): v for i, row in enumerate(vt) for c, v in row.items()}),
        m,
        n,
    )
