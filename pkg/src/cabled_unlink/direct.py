"""
Direct Route

Handles the closed-form computation of the cabled homology of a 0-framed
unknot: every class reduces to one with an empty W-partition, and those
classes form a basis.
"""

import logging
from functools import lru_cache
from typing import Dict, List, Sequence, Union

from core.errors import InvalidConfigError
from intlinalg import GradedGroup
from partitions import BoundedPartition, convolve, enumerate_partitions

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _reduce(d: BoundedPartition, e: BoundedPartition, N: int) -> tuple:
    if not e.parts:
        return ((d, 1),)
    s = e.parts[0]
    rest = e.remove_part(s)
    out: Dict[BoundedPartition, int] = {}
    # (d, rest + s) = −Σ_{k<s} (d + (s−k), rest + k)
    for k in range(s):
        for target, coefficient in _reduce(d.add_part(s - k), rest.add_part(k), N):
            out[target] = out.get(target, 0) - coefficient
    return tuple(sorted((t, c) for t, c in out.items() if c))


def reduce_pair(d: BoundedPartition, e: BoundedPartition, N: int) -> Dict[BoundedPartition, int]:
    """
    Normal form of the class (𝐝, 𝐞) modulo the relations ψ^{[m]}(v) ∼ 0, m ≤ N−2.

    The largest W-part s is removed using the relation whose last term is
    (𝐝, 𝐞); repeated until 𝐞 is empty.

    Args:
        d: V-partition on negative strands
        e: W-partition on positive strands
        N: Rank

    Returns:
        Map from V-partitions 𝐝' (standing for (𝐝', ∅)) to integer coefficients
    """
    if N < 2 and e.parts:
        raise InvalidConfigError("Rank 1 has no nonzero exponents", {'N': N})
    return dict(_reduce(d, e, N))


def normal_form_basis(N: int, q: int) -> List[BoundedPartition]:
    """The classes (𝐝, ∅) with |𝐝| = q, in canonical order."""
    if N == 1:
        return [BoundedPartition((), 0)] if q == 0 else []
    return enumerate_partitions(q, N - 1)


def _single_ranks(N: int, q_max: int) -> List[int]:
    return [len(normal_form_basis(N, q)) for q in range(q_max + 1)]


def cabled_direct(N: int, alpha: Union[int, Sequence[int]], q_max: int) -> GradedGroup:
    """
    Cabled homology of the 0-framed unknot (or unlink) by counting normal forms.

    Ranks are counts of normal_form_basis: reduce_pair sends every class
    (𝐝, 𝐞) onto the classes (𝐝', ∅), so no reduction is run here.

    The result is free, supported in homological degree 0, with rank at
    (0, −2q) equal to the number of partitions of q into parts ≤ N−1. It does
    not depend on alpha. For several components the single-component ranks
    are convolved.

    Args:
        N: Rank
        alpha: Level, an integer or one integer per component
        q_max: Quantum depth; degrees 0, −2, ..., −2·q_max are reported

    Returns:
        GradedGroup with explicit pieces for every reported degree
    """
    if N < 1:
        raise InvalidConfigError(f"Rank N must be at least 1, got {N}", {'N': N})
    if q_max < 0:
        raise InvalidConfigError(f"q_max must be nonnegative, got {q_max}", {'q_max': q_max})
    alphas = [alpha] if isinstance(alpha, int) else list(alpha)
    if not alphas:
        raise InvalidConfigError("At least one component is required")

    single = _single_ranks(N, q_max)
    ranks = [1] + [0] * q_max
    for _ in alphas:
        ranks = convolve(ranks, single, q_max)
    logger.info(f"Direct route N={N}, alpha={alphas}: ranks {ranks}")

    group = GradedGroup()
    for q, rank in enumerate(ranks):
        group.set_piece(0, -2 * q, rank)
    return group
