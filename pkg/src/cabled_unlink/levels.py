"""
Cable Levels and Symmetrized Bases

Handles the level data of a cabled 0-framed unlink and the orbit bases of
𝒜^{⊗(r−α⁻)} ⊗ ℬ^{⊗(r+α⁺)} modulo the symmetric groups permuting like strands.

Orbit basis elements are labeled in the V/W basis (V^a = X^{N−1−a}): per
component, a pair of partitions (𝐝, 𝐞) listing the nonzero V- and W-exponents.
"""

import logging
import math
from dataclasses import dataclass, replace
from itertools import product
from typing import List, Sequence, Tuple

from core.errors import InvalidConfigError
from partitions import BoundedPartition, enumerate_up_to_length

logger = logging.getLogger(__name__)

StandardComponent = Tuple[Tuple[int, ...], Tuple[int, ...]]
StandardLabel = Tuple[StandardComponent, ...]


@dataclass(frozen=True)
class CableLevel:
    """
    Level of the cable for every component of the unlink.

    Component i carries r_i − α⁻_i negatively oriented strands and r_i + α⁺_i
    positively oriented strands, with α⁺ = max(α, 0) and α⁻ = min(α, 0).
    """
    N: int
    alpha: Tuple[int, ...]
    r: Tuple[int, ...]

    def __post_init__(self):
        if self.N < 1:
            raise InvalidConfigError(f"Rank N must be at least 1, got {self.N}", {'N': self.N})
        if len(self.alpha) != len(self.r):
            raise InvalidConfigError("alpha and r must have one entry per component",
                                     {'alpha': list(self.alpha), 'r': list(self.r)})
        for i in range(len(self.r)):
            if self.r[i] < 0 or self.negative_strands(i) < 0 or self.positive_strands(i) < 0:
                raise InvalidConfigError(f"Negative strand count on component {i}",
                                         {'alpha': list(self.alpha), 'r': list(self.r)})

    @classmethod
    def single(cls, N: int, alpha: int, r: int) -> 'CableLevel':
        return cls(N, (alpha,), (r,))

    @property
    def components(self) -> int:
        return len(self.r)

    def negative_strands(self, i: int) -> int:
        return self.r[i] - min(self.alpha[i], 0)

    def positive_strands(self, i: int) -> int:
        return self.r[i] + max(self.alpha[i], 0)

    def strand_count(self, i: int) -> int:
        return 2 * self.r[i] + abs(self.alpha[i])

    @property
    def shift(self) -> int:
        """The quantum shift (1−N)·Σ(2r_i + |α_i|) applied to the unlink homology."""
        return (1 - self.N) * sum(self.strand_count(i) for i in range(self.components))

    def raised(self, component: int) -> 'CableLevel':
        r = list(self.r)
        r[component] += 1
        return replace(self, r=tuple(r))


@dataclass(frozen=True, order=True)
class PartitionPair:
    """Nonzero V-exponents 𝐝 on negative strands and W-exponents 𝐞 on positive strands."""
    d: BoundedPartition
    e: BoundedPartition

    @property
    def size(self) -> int:
        return self.d.size + self.e.size

    def __str__(self) -> str:
        return f"({self.d}, {self.e})"


@dataclass(frozen=True, order=True)
class SymmetrizedBasisElt:
    """Orbit basis element: one PartitionPair per component."""
    pairs: Tuple[PartitionPair, ...]

    @property
    def quantum_degree(self) -> int:
        return -2 * sum(pair.size for pair in self.pairs)

    def fits(self, level: CableLevel) -> bool:
        return all(
            pair.d.length <= level.negative_strands(i) and pair.e.length <= level.positive_strands(i)
            for i, pair in enumerate(self.pairs)
        )

    def with_pair(self, component: int, pair: PartitionPair) -> 'SymmetrizedBasisElt':
        pairs = list(self.pairs)
        pairs[component] = pair
        return SymmetrizedBasisElt(tuple(pairs))

    def __str__(self) -> str:
        return ' ⊠ '.join(str(pair) for pair in self.pairs)


def empty_pair(N: int) -> PartitionPair:
    empty = BoundedPartition((), max(N - 1, 0))
    return PartitionPair(empty, empty)


def _partitions_within(N: int, length: int) -> List[BoundedPartition]:
    if N == 1:
        return [BoundedPartition((), 0)]
    return enumerate_up_to_length(N - 1, length)


def level_basis(level: CableLevel) -> List[SymmetrizedBasisElt]:
    """
    Orbit basis of the unlink homology at a level, in sorted order.

    Args:
        level: Cable level

    Returns:
        Sorted list of SymmetrizedBasisElt fitting the level
    """
    per_component = []
    for i in range(level.components):
        pairs = [
            PartitionPair(d, e)
            for d in _partitions_within(level.N, level.negative_strands(i))
            for e in _partitions_within(level.N, level.positive_strands(i))
        ]
        per_component.append(pairs)
    return sorted(SymmetrizedBasisElt(tuple(combo)) for combo in product(*per_component))


def stabilization_bound(alpha: Sequence[int], q_min: int) -> int:
    """Smallest r_max certified to reproduce the colimit in degrees j ≥ q_min."""
    widest = max((abs(a) for a in alpha), default=0)
    return math.ceil(abs(min(q_min, 0)) / 2 + widest) + 1


def standard_degree(label: StandardLabel, N: int) -> int:
    """Shifted quantum degree of a standard-basis orbit label."""
    total = 0
    for a_exps, b_exps in label:
        strands = len(a_exps) + len(b_exps)
        total += 2 * (1 - N) * strands + 2 * (sum(a_exps) + sum(b_exps))
    return total


def standard_to_vw(label: StandardLabel, N: int) -> SymmetrizedBasisElt:
    """Re-index X-exponent multisets into V/W partition labels."""
    pairs = []
    for a_exps, b_exps in label:
        d = BoundedPartition.of([N - 1 - m for m in a_exps if m != N - 1], max(N - 1, 0))
        e = BoundedPartition.of([N - 1 - m for m in b_exps if m != N - 1], max(N - 1, 0))
        pairs.append(PartitionPair(d, e))
    return SymmetrizedBasisElt(tuple(pairs))


def vw_to_standard(elt: SymmetrizedBasisElt, level: CableLevel) -> StandardLabel:
    """Inverse of standard_to_vw at a given level (pads with X^{N−1} factors)."""
    if not elt.fits(level):
        raise InvalidConfigError(f"Basis element {elt} does not fit level {level.r}")
    N = level.N
    label = []
    for i, pair in enumerate(elt.pairs):
        a = [N - 1 - v for v in pair.d.parts] + [N - 1] * (level.negative_strands(i) - pair.d.length)
        b = [N - 1 - v for v in pair.e.parts] + [N - 1] * (level.positive_strands(i) - pair.e.length)
        label.append((tuple(sorted(a)), tuple(sorted(b))))
    return tuple(label)
