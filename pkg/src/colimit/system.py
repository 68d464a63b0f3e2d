"""
Truncated Systems

Handles the parameters of the truncated direct-sum quotient for the p-framed
unknot at level 0 and the graded pieces that enter it.
"""

import logging
from dataclasses import dataclass
from typing import List, Tuple

from center import SIGN_CONVENTIONS, CONJECTURED, expected_rank
from core.errors import InvalidConfigError
from intlinalg import GradedGroup

logger = logging.getLogger(__name__)

POSITIVE = 'positive'
NEGATIVE = 'negative'
P_SIGNS = (POSITIVE, NEGATIVE)


@dataclass(frozen=True)
class TruncatedSystem:
    """
    Truncation data for the framed unknot.

    Features:
    - p_sign selects centers (positive) or dual centers (negative) as pieces
    - n_max bounds the cable level
    - j_window is the inclusive quantum-degree interval reported
    - N and alpha are carried only to reject unsupported requests
    """
    p_sign: str
    n_max: int
    j_window: Tuple[int, int]
    sign_convention: str = CONJECTURED
    N: int = 2
    alpha: int = 0

    def __post_init__(self):
        if self.p_sign not in P_SIGNS:
            raise InvalidConfigError(f"p_sign must be one of {P_SIGNS}, got {self.p_sign!r}")
        if self.n_max < 0:
            raise InvalidConfigError(f"n_max must be nonnegative, got {self.n_max}", {'n_max': self.n_max})
        lo, hi = self.j_window
        if lo > hi:
            raise InvalidConfigError(f"Empty quantum window {self.j_window}")
        if self.sign_convention not in SIGN_CONVENTIONS:
            raise InvalidConfigError(f"Unknown sign convention {self.sign_convention!r}",
                                     {'allowed': list(SIGN_CONVENTIONS)})
        if self.N != 2 or self.alpha != 0:
            raise InvalidConfigError(
                "Framed unknots are supported only for N = 2 at level alpha = 0",
                {'N': self.N, 'alpha': self.alpha},
            )

    def degrees(self) -> List[int]:
        """Even degrees of the window, highest first."""
        lo, hi = self.j_window
        top = hi if hi % 2 == 0 else hi - 1
        return list(range(top, lo - 1, -2))

    def truncated(self, n_max: int) -> 'TruncatedSystem':
        return TruncatedSystem(self.p_sign, n_max, self.j_window, self.sign_convention, self.N, self.alpha)

    def piece_k(self, n: int, j: int) -> int:
        """Half-degree of the center (or dual) piece at level n in cabled degree j."""
        if self.p_sign == POSITIVE:
            return 2 * n + j // 2
        return -j // 2


def torus_piece_ranks(n: int, p_sign: str) -> GradedGroup:
    """
    Graded ranks of the torus link cable in homological degree 0, read from the
    center: Z(H^n)_{2n+j} for positive framing, Z(H^n)^∨_{2n−j} for negative.

    Args:
        n: Half the number of strands
        p_sign: 'positive' or 'negative'

    Returns:
        GradedGroup with pieces at (0, j)
    """
    if p_sign not in P_SIGNS:
        raise InvalidConfigError(f"p_sign must be one of {P_SIGNS}, got {p_sign!r}")
    group = GradedGroup()
    for k in range(n + 1):
        j = 2 * k - 2 * n if p_sign == POSITIVE else 2 * n - 2 * k
        group.set_piece(0, j, expected_rank(n, k))
    return group
