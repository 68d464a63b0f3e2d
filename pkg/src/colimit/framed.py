"""
Framed Unknot

Handles the cabled KhR_2 homology of the p-framed unknot at level 0 as a
truncated quotient of the direct sum of center pieces (p > 0) or dual center
pieces (p < 0), with a stabilization certificate per degree.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from tqdm import tqdm

from center import (
    CenterElement,
    DualFunctional,
    admissible_basis,
    adjacent_generators,
    center_presented,
    dual_center,
    psi_phi_negative,
    psi_phi_positive,
    symmetric_action,
)
from core.errors import UnstableWindowError
from intlinalg import GradedGroup, IntMatrix, cokernel

from .system import NEGATIVE, POSITIVE, TruncatedSystem, torus_piece_ranks

logger = logging.getLogger(__name__)

Piece = Tuple[int, Tuple[int, ...]]


@dataclass
class FramedUnknotResult:
    """Graded group plus, per degree, whether it is certified stable or exact."""
    group: GradedGroup
    stable: Dict[int, bool] = field(default_factory=dict)
    exact: Dict[int, bool] = field(default_factory=dict)

    @property
    def all_stable(self) -> bool:
        return all(self.stable.values())

    def unstable_degrees(self) -> List[int]:
        return sorted((j for j, ok in self.stable.items() if not ok), reverse=True)


class _Assembler:
    """Generator indexing and relation columns for one degree."""

    def __init__(self):
        self.index: Dict[Tuple[int, int], int] = {}
        self.columns: List[Dict[int, int]] = []

    def add_generators(self, n: int, count: int) -> None:
        for b in range(count):
            self.index[(n, b)] = len(self.index)

    def column(self, entries: Dict[Tuple[int, int], int]) -> None:
        col: Dict[int, int] = {}
        for key, value in entries.items():
            if value:
                row = self.index[key]
                col[row] = col.get(row, 0) + value
        col = {r: v for r, v in col.items() if v}
        if col:
            self.columns.append(col)

    def cokernel(self, max_nonzeros: Optional[int]) -> Piece:
        matrix = IntMatrix.from_columns(len(self.index), self.columns)
        free_rank, torsion = cokernel(matrix, max_nonzeros=max_nonzeros)
        return free_rank, tuple(torsion)


def _admissible_entries(n: int, element: CenterElement) -> Dict[Tuple[int, int], int]:
    basis = [a.subset for a in admissible_basis(n, element.k)]
    position = {s: b for b, s in enumerate(basis)}
    return {(n, position[s]): v for s, v in element.reduced().items()}


def _dual_entries(n: int, f: DualFunctional) -> Dict[Tuple[int, int], int]:
    coords = dual_center(n, f.k).coordinates(f)
    if coords is None:
        raise ArithmeticError(f"Functional {f} is outside the dual center of H^{n}")
    return {(n, b): v for b, v in enumerate(coords) if v}


def _has_piece(n: int, k: int) -> bool:
    return n >= 0 and 0 <= k <= n


def _level_rank(n: int, k: int, p_sign: str) -> int:
    """
    Generator count of level n, checked against the torus link cable ranks.

    Z(H^n)_{2k} sits in torus degree 2k − 2n and Z(H^n)^∨_{2k} in 2n − 2k.
    """
    if p_sign == POSITIVE:
        count = len(admissible_basis(n, k))
        torus_j = 2 * k - 2 * n
    else:
        count = dual_center(n, k).rank
        torus_j = 2 * n - 2 * k
    expected = torus_piece_ranks(n, p_sign).rank(0, torus_j)
    if count != expected:
        raise ArithmeticError(
            f"Level {n} has {count} generators in degree {2 * k}, torus cable rank is {expected}"
        )
    return count


def positive_degree(j: int, n_max: int, convention: str,
                    max_nonzeros: Optional[int] = None) -> Piece:
    """
    Truncated quotient in cabled degree j for positive framing.

    Pieces are Z(H^n)_{2k} with k = 2n + j/2. A φ relation whose target piece
    is zero (k + 2 > n + 1) is kept at every level, since it forces v ∼ 0.
    """
    asm = _Assembler()
    levels = [n for n in range(n_max + 1) if _has_piece(n, 2 * n + j // 2)]
    for n in levels:
        asm.add_generators(n, _level_rank(n, 2 * n + j // 2, POSITIVE))

    for n in levels:
        k = 2 * n + j // 2
        for b, a in enumerate(admissible_basis(n, k)):
            x = CenterElement.monomial(n, a.subset)
            for sigma in adjacent_generators(n):
                moved = _admissible_entries(n, symmetric_action(sigma, x))
                moved[(n, b)] = moved.get((n, b), 0) - 1
                asm.column(moved)
            _, phi = psi_phi_positive(n, x, convention)
            if not _has_piece(n + 1, k + 2):
                asm.column({(n, b): -1})
            elif n + 1 <= n_max:
                entries = _admissible_entries(n + 1, phi)
                entries[(n, b)] = entries.get((n, b), 0) - 1
                asm.column(entries)

    # ψ(u) ∼ 0 for u in cabled degree j + 2 at level n
    for n in range(n_max):
        k_source = 2 * n + (j + 2) // 2
        if not _has_piece(n, k_source) or not _has_piece(n + 1, k_source + 1):
            continue
        for a in admissible_basis(n, k_source):
            psi, _ = psi_phi_positive(n, CenterElement.monomial(n, a.subset), convention)
            asm.column(_admissible_entries(n + 1, psi))

    return asm.cokernel(max_nonzeros)


def negative_degree(j: int, n_max: int, convention: str,
                    max_nonzeros: Optional[int] = None) -> Piece:
    """
    Truncated quotient in cabled degree j = −2k for negative framing.

    Pieces are Z(H^n)^∨_{2k} for k ≤ n ≤ n_max, in lattice coordinates.
    """
    if j > 0:
        return 0, ()
    k = -j // 2
    asm = _Assembler()
    levels = [n for n in range(n_max + 1) if _has_piece(n, k)]
    for n in levels:
        asm.add_generators(n, _level_rank(n, k, NEGATIVE))

    for n in levels:
        for b, f in enumerate(dual_center(n, k).basis):
            for sigma in adjacent_generators(n):
                moved = _dual_entries(n, symmetric_action(sigma, f))
                moved[(n, b)] = moved.get((n, b), 0) - 1
                asm.column(moved)
            if n + 1 <= n_max:
                _, phi = psi_phi_negative(n, f, convention)
                entries = _dual_entries(n + 1, phi)
                entries[(n, b)] = entries.get((n, b), 0) - 1
                asm.column(entries)

    if k >= 1:
        for n in range(max(k - 1, 0), n_max):
            for f in dual_center(n, k - 1).basis:
                psi, _ = psi_phi_negative(n, f, convention)
                asm.column(_dual_entries(n + 1, psi))

    return asm.cokernel(max_nonzeros)


def _degree_piece(system: TruncatedSystem, j: int, n_max: int,
                  max_nonzeros: Optional[int]) -> Piece:
    if n_max < 0:
        return 0, ()
    if system.p_sign == POSITIVE:
        if j > 0:
            return 0, ()
        return positive_degree(j, n_max, system.sign_convention, max_nonzeros)
    return negative_degree(j, n_max, system.sign_convention, max_nonzeros)


def _is_exact(system: TruncatedSystem, j: int) -> bool:
    if j > 0:
        return True
    if system.p_sign == POSITIVE:
        return system.n_max >= -j // 2
    return False


def _is_stable(system: TruncatedSystem, j: int, piece: Piece,
               max_nonzeros: Optional[int]) -> bool:
    """
    Whether degree j agrees at n_max and at a neighbouring truncation with a piece there.

    The neighbour is n_max − 1 when that level has a piece, otherwise n_max + 1.
    A degree with no piece at n_max itself is never certified.
    """
    n_max = system.n_max
    if not _has_piece(n_max, system.piece_k(n_max, j)):
        return False
    lower = n_max - 1
    if lower >= 0 and _has_piece(lower, system.piece_k(lower, j)):
        return piece == _degree_piece(system, j, lower, max_nonzeros)
    logger.debug(f"j={j}: level {lower} has no piece, comparing with n_max={n_max + 1}")
    return piece == _degree_piece(system, j, n_max + 1, max_nonzeros)


def cabled_khr2_framed_unknot(system: TruncatedSystem,
                              allow_unstable: bool = False,
                              max_nonzeros: Optional[int] = None,
                              progress: bool = False) -> FramedUnknotResult:
    """
    Cabled KhR_2 of the p-framed unknot at level 0, homological degree 0.

    A degree is stable when its piece is exact for the truncation, or when it
    agrees at n_max and at a neighbouring truncation whose top level also has
    a piece in that degree (n_max − 1, or n_max + 1 when level n_max − 1 is
    empty there).

    Args:
        system: Truncation data
        allow_unstable: Return unstable degrees instead of raising
        max_nonzeros: Cap on relation-matrix nonzeros
        progress: Show a progress bar over degrees

    Returns:
        FramedUnknotResult with the graded group and per-degree certificates
    """
    result = FramedUnknotResult(GradedGroup())
    for j in tqdm(system.degrees(), desc='framed degrees', disable=not progress):
        piece = _degree_piece(system, j, system.n_max, max_nonzeros)
        exact = _is_exact(system, j)
        stable = exact or _is_stable(system, j, piece, max_nonzeros)
        result.group.set_piece(0, j, piece[0], piece[1])
        result.exact[j] = exact
        result.stable[j] = stable
        logger.info(f"p {system.p_sign}, j={j}: rank {piece[0]}, torsion {list(piece[1])}, "
                    f"stable={stable}, exact={exact}")

    unstable = result.unstable_degrees()
    if unstable:
        if not allow_unstable:
            raise UnstableWindowError(
                f"Degrees {unstable} did not stabilize by n_max={system.n_max}",
                {'unstable_degrees': unstable, 'n_max': system.n_max},
            )
        logger.warning(f"Reporting unstable degrees {unstable}")
    return result
