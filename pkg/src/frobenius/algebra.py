"""
Frobenius Algebra

Handles the rank-N Frobenius algebra (ℤ[X]/⟨X^N⟩){1−N}: multiplication,
comultiplication, counit and the V-basis re-indexing V^a = X^{N−1−a}.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional

from core.errors import InvalidConfigError

from .tensor import NEGATIVE, POSITIVE, TensorElt

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class FrobBasisElt:
    """Basis monomial X^m of the rank-N algebra, tagged with a strand orientation."""
    m: int
    N: int
    orientation: str = NEGATIVE

    def __post_init__(self):
        if self.N < 1:
            raise InvalidConfigError(f"Rank N must be at least 1, got {self.N}", {'N': self.N})
        if not 0 <= self.m <= self.N - 1:
            raise InvalidConfigError(f"Exponent {self.m} outside [0, {self.N - 1}]",
                                     {'m': self.m, 'N': self.N})
        if self.orientation not in (NEGATIVE, POSITIVE):
            raise InvalidConfigError(f"Unknown orientation tag {self.orientation!r}")

    @property
    def quantum_degree(self) -> int:
        return (1 - self.N) + 2 * self.m

    @property
    def bidegree(self):
        return (0, self.quantum_degree)


class FrobeniusAlgebra:
    """
    The rank-N coefficient algebra of every computation.

    Features:
    - multiply: X^a · X^b = X^{a+b} or zero
    - comultiply: Δ(X^m) = Σ_k X^{k+m} ⊗ X^{N−1−k}
    - counit: ε(X^{N−1}) = 1, zero elsewhere
    - Involutive V-basis re-indexing used by the partition reduction
    """

    def __init__(self, N: int):
        if N < 1:
            raise InvalidConfigError(f"Rank N must be at least 1, got {N}", {'N': N})
        self.N = N

    def basis(self, orientation: str = NEGATIVE) -> List[FrobBasisElt]:
        return [FrobBasisElt(m, self.N, orientation) for m in range(self.N)]

    def element(self, m: int, orientation: str = NEGATIVE) -> FrobBasisElt:
        return FrobBasisElt(m, self.N, orientation)

    def multiply(self, a: FrobBasisElt, b: FrobBasisElt) -> Optional[FrobBasisElt]:
        """
        Product of two basis monomials.

        Args:
            a: Left factor
            b: Right factor

        Returns:
            X^{a+b} when a+b ≤ N−1, otherwise None (the zero element)
        """
        total = a.m + b.m
        if total > self.N - 1:
            return None
        return FrobBasisElt(total, self.N, a.orientation)

    def comultiply(self, x: FrobBasisElt) -> TensorElt:
        """Δ(X^m) as a two-factor tensor; raises quantum degree by N−1."""
        terms = {}
        for k in range(self.N - x.m):
            key = ((x.orientation, k + x.m), (x.orientation, self.N - 1 - k))
            terms[key] = terms.get(key, 0) + 1
        return TensorElt(self.N, terms)

    def counit(self, x: FrobBasisElt) -> int:
        return 1 if x.m == self.N - 1 else 0

    def unit(self, orientation: str = NEGATIVE) -> FrobBasisElt:
        return FrobBasisElt(0, self.N, orientation)

    def to_v_index(self, m: int) -> int:
        """X^m = V^{N−1−m}; the map is its own inverse."""
        if not 0 <= m <= self.N - 1:
            raise InvalidConfigError(f"Exponent {m} outside [0, {self.N - 1}]")
        return self.N - 1 - m

    from_v_index = to_v_index
