"""
Brute-Force Center

Handles the center of H^n computed directly as the integer kernel of
x ↦ (x·h − h·x) over a generating set {h} of H^n.
"""

import logging
from typing import Dict, List, Optional, Tuple

from tqdm import tqdm

from core.errors import ResourceCapError
from core.settings import DEFAULT_CENTER_MAX_N, DEFAULT_MAX_DIM
from intlinalg import GradedGroup, IntMatrix, kernel_basis

from .ring import ArcBasis, ArcElement, arc_basis, hn_multiply

logger = logging.getLogger(__name__)


def _unknowns(n: int, degree: int, block_diagonal: bool) -> List[ArcBasis]:
    return [
        d for d in arc_basis(n)
        if d.degree == degree and (not block_diagonal or d.a == d.b)
    ]


def commutator_matrix(n: int, unknowns: List[ArcBasis],
                      generators: List[ArcBasis]) -> IntMatrix:
    """
    Matrix of x ↦ (x·h − h·x)_h on the span of `unknowns`.

    Rows are indexed by (generator, output diagram) pairs that occur.
    """
    row_index: Dict[Tuple[ArcBasis, ArcBasis], int] = {}
    columns: List[Dict[int, int]] = []
    for u in unknowns:
        ue = ArcElement.basis(u)
        column: Dict[int, int] = {}
        for h in generators:
            he = ArcElement.basis(h)
            commutator = hn_multiply(ue, he) - hn_multiply(he, ue)
            for diagram, value in commutator.terms.items():
                row = row_index.setdefault((h, diagram), len(row_index))
                column[row] = column.get(row, 0) + value
        columns.append(column)
    return IntMatrix.from_columns(len(row_index), columns)


def center_bruteforce(n: int, max_n: Optional[int] = None,
                      max_dim: Optional[int] = None,
                      block_diagonal: bool = True,
                      generators: Optional[List[ArcBasis]] = None,
                      progress: bool = False) -> Tuple[GradedGroup, List[ArcElement]]:
    """
    Center of the arc ring H^n by direct computation.

    A central element commutes with every idempotent, so its support lies in
    the diagonal blocks ₐH_ₐ; `block_diagonal=False` drops that restriction.

    Args:
        n: Number of arcs
        max_n: Largest n accepted (defaults to the configured bound)
        max_dim: Cap on unknowns × generators and on matrix nonzeros
        block_diagonal: Restrict unknowns to the diagonal blocks
        generators: Generating set {h}; defaults to every basis diagram
        progress: Show a progress bar over degrees

    Returns:
        (graded ranks at (0, degree), central basis elements in degree order)
    """
    max_n = DEFAULT_CENTER_MAX_N if max_n is None else max_n
    max_dim = DEFAULT_MAX_DIM if max_dim is None else max_dim
    if n > max_n:
        raise ResourceCapError(f"Brute-force center limited to n <= {max_n}, got n={n}",
                               {'n': n, 'max_n': max_n})
    basis = arc_basis(n)
    generators = basis if generators is None else generators
    candidate_count = sum(1 for d in basis if not block_diagonal or d.a == d.b)
    if candidate_count * len(generators) > max_dim:
        raise ResourceCapError(
            f"Brute-force center needs {candidate_count} x {len(generators)} products, above {max_dim}",
            {'unknowns': candidate_count, 'generators': len(generators), 'cap': max_dim},
        )
    logger.info(f"Brute-force center of H^{n}: {len(basis)} basis diagrams")

    group = GradedGroup()
    central: List[ArcElement] = []
    degrees = sorted({d.degree for d in basis})
    for degree in tqdm(degrees, desc='center degrees', disable=not progress):
        unknowns = _unknowns(n, degree, block_diagonal)
        if not unknowns:
            continue
        matrix = commutator_matrix(n, unknowns, generators)
        kernel = kernel_basis(matrix, max_nonzeros=max_dim)
        for vector in kernel:
            central.append(ArcElement(n, {unknowns[k]: v for k, v in vector.items()}))
        if kernel or degree in range(0, 2 * n + 1, 2):
            group.set_piece(0, degree, len(kernel))
    return group, central
