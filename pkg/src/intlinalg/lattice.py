"""
Cokernels and Lattices

Handles cokernel structure, coordinates in a cokernel, integer kernels and
membership of vectors in integer lattices.
"""

import logging
from typing import Dict, List, Optional, Tuple

import sympy

from .matrix import IntMatrix
from .smith import SnfResult, check_capacity, smith_normal_form

logger = logging.getLogger(__name__)

SparseVector = Dict[int, int]


def cokernel(matrix: IntMatrix, max_nonzeros: Optional[int] = None) -> Tuple[int, List[int]]:
    """
    Structure of ℤ^rows / image(matrix).

    Args:
        matrix: Relation matrix; columns are relations among the row generators
        max_nonzeros: Optional cap on the nonzero count

    Returns:
        (free_rank, torsion) with torsion the divisors greater than one
    """
    snf = smith_normal_form(matrix, transforms=False, max_nonzeros=max_nonzeros)
    free_rank = matrix.rows - snf.rank
    torsion = [d for d in snf.diagonal if d > 1]
    return free_rank, torsion


class CokernelMap:
    """
    Coordinates of vectors in the cokernel of a relation matrix.

    Features:
    - Free coordinates of a generator-space vector
    - Torsion coordinates reduced modulo their divisors
    - Lifts of free basis vectors back to the generator space
    """

    def __init__(self, relations: IntMatrix, max_nonzeros: Optional[int] = None):
        self.relations = relations
        self.snf: SnfResult = smith_normal_form(relations, transforms=True,
                                                max_nonzeros=max_nonzeros)
        self.generator_count = relations.rows
        self.rank = self.snf.rank
        self.torsion = [d for d in self.snf.diagonal if d > 1]
        self.free_rank = relations.rows - self.rank
        self._u_rows: List[SparseVector] = [{} for _ in range(relations.rows)]
        for (i, j), v in self.snf.U.items():
            self._u_rows[i][j] = v
        self._lifts: Optional[List[SparseVector]] = None

    def _u_times(self, vector: SparseVector) -> List[int]:
        return [sum(v * vector.get(j, 0) for j, v in row.items()) for row in self._u_rows]

    def free_coordinates(self, vector: SparseVector) -> Tuple[int, ...]:
        """Coordinates of the class of `vector` in the free part."""
        return tuple(self._u_times(vector)[self.rank:])

    def torsion_coordinates(self, vector: SparseVector) -> Tuple[int, ...]:
        ux = self._u_times(vector)
        return tuple(ux[i] % d for i, d in enumerate(self.snf.diagonal) if d > 1)

    def is_zero(self, vector: SparseVector) -> bool:
        ux = self._u_times(vector)
        if any(ux[self.rank:]):
            return False
        return all(ux[i] % d == 0 for i, d in enumerate(self.snf.diagonal))

    def free_lifts(self) -> List[SparseVector]:
        """Generator-space vectors whose classes form the free basis."""
        if self._lifts is None:
            inverse = solve_unimodular_inverse(self.snf.U)
            cols = inverse.columns()
            self._lifts = [cols[i] for i in range(self.rank, self.generator_count)]
        return self._lifts


def solve_unimodular_inverse(unimodular: IntMatrix) -> IntMatrix:
    """Exact inverse of a unimodular matrix."""
    inverse = sympy.Matrix(unimodular.to_dense()).inv()
    return IntMatrix.from_dense([[int(x) for x in row] for row in inverse.tolist()])


def kernel_basis(matrix: IntMatrix, max_nonzeros: Optional[int] = None) -> List[SparseVector]:
    """
    A ℤ-basis of the integer kernel {x : matrix @ x = 0}.

    Columns are reduced to echelon form by unimodular column operations, and
    the transform columns landing on zero columns span the kernel.

    Args:
        matrix: Integer matrix
        max_nonzeros: Optional cap on the nonzero count

    Returns:
        Sparse kernel basis vectors indexed by column
    """
    check_capacity(matrix, max_nonzeros)
    cols = matrix.columns()
    transform: List[SparseVector] = [{j: 1} for j in range(matrix.cols)]
    active = list(range(matrix.cols))

    def combine(target: int, source: int, factor: int) -> None:
        for store in (cols, transform):
            dst = store[target]
            for key, v in store[source].items():
                nv = dst.get(key, 0) + factor * v
                if nv:
                    dst[key] = nv
                else:
                    dst.pop(key, None)

    for row in range(matrix.rows):
        hits = [j for j in active if cols[j].get(row)]
        if not hits:
            continue
        while len(hits) > 1:
            hits.sort(key=lambda j: abs(cols[j][row]))
            pivot = hits[0]
            p = cols[pivot][row]
            for j in hits[1:]:
                combine(j, pivot, -(cols[j][row] // p))
            hits = [j for j in hits if cols[j].get(row)]
        active.remove(hits[0])
    return [transform[j] for j in active]


def solve_in_lattice(basis: IntMatrix, vector: SparseVector,
                     snf: Optional[SnfResult] = None) -> Optional[List[int]]:
    """
    Integer solution x of basis @ x = vector, or None when none exists.

    Args:
        basis: Matrix whose columns generate the lattice
        vector: Target vector indexed by row
        snf: Precomputed Smith normal form of basis (with transforms)

    Returns:
        Integer coefficient list, or None if vector is outside the lattice
    """
    if snf is None or snf.U is None:
        snf = smith_normal_form(basis, transforms=True)
    u_rows: List[SparseVector] = [{} for _ in range(basis.rows)]
    for (i, j), v in snf.U.items():
        u_rows[i][j] = v
    uv = [sum(v * vector.get(j, 0) for j, v in row.items()) for row in u_rows]
    if any(uv[snf.rank:]):
        return None
    y: Dict[int, int] = {}
    for i, d in enumerate(snf.diagonal):
        if uv[i] % d:
            return None
        if uv[i]:
            y[i] = uv[i] // d
    x = snf.V.apply(y)
    return [x.get(j, 0) for j in range(basis.cols)]


def rational_rank(matrix: IntMatrix) -> int:
    """Rank over ℚ, used only for cross-checks."""
    if matrix.rows == 0 or matrix.cols == 0:
        return 0
    return sympy.Matrix(matrix.to_dense()).rank()
