"""
Symmetric Group Action

Handles the action of S_n × S_n (odd and even points permuted separately) on
the center and its dual by relabeling the variables X_i.
"""

import logging
from typing import Dict, Sequence, Union

from core.errors import InvalidConfigError

from .dual import DualFunctional
from .presentation import CenterElement

logger = logging.getLogger(__name__)

Permutation = Dict[int, int]


def parity_permutation(sigma_odd: Sequence[int], sigma_even: Sequence[int]) -> Permutation:
    """
    Point permutation built from permutations of the odd and of the even points.

    sigma_odd[t] = s sends the (t+1)-th odd point 2t+1 to the (s)-th odd point
    2s−1 (1-based s); likewise for evens.
    """
    if sorted(sigma_odd) != list(range(1, len(sigma_odd) + 1)):
        raise InvalidConfigError(f"{list(sigma_odd)} is not a permutation")
    if sorted(sigma_even) != list(range(1, len(sigma_even) + 1)):
        raise InvalidConfigError(f"{list(sigma_even)} is not a permutation")
    perm: Permutation = {}
    for t, s in enumerate(sigma_odd):
        perm[2 * t + 1] = 2 * s - 1
    for t, s in enumerate(sigma_even):
        perm[2 * t + 2] = 2 * s
    return perm


def transposition(i: int, j: int) -> Permutation:
    return {i: j, j: i}


def _validate(permutation: Permutation, n: int) -> Permutation:
    points = range(1, 2 * n + 1)
    full = {p: permutation.get(p, p) for p in points}
    if sorted(full.values()) != list(points):
        raise InvalidConfigError(f"{permutation} is not a permutation of 1..{2 * n}")
    mixing = {p: q for p, q in full.items() if (p - q) % 2}
    if mixing:
        raise InvalidConfigError(
            f"Permutation mixes odd and even points: {mixing}",
            {'mixing': {str(p): q for p, q in mixing.items()}},
        )
    return full


def symmetric_action(permutation: Permutation,
                     x: Union[CenterElement, DualFunctional]) -> Union[CenterElement, DualFunctional]:
    """
    Relabel every variable: X_I ↦ X_{σ(I)}, and X_I^∨ ↦ X_{σ(I)}^∨ on the dual.

    Args:
        permutation: Map on points (unlisted points are fixed); must preserve parity
        x: Element of the center or functional on it

    Returns:
        The permuted element, of the same type
    """
    full = _validate(permutation, x.n)
    terms = {tuple(sorted(full[i] for i in s)): v for s, v in x.terms.items()}
    if isinstance(x, DualFunctional):
        return DualFunctional(x.n, x.k, terms)
    return CenterElement(x.n, x.k, terms)


def adjacent_generators(n: int):
    """Transpositions of consecutive odd points and of consecutive even points."""
    out = []
    for t in range(1, n):
        out.append(transposition(2 * t - 1, 2 * t + 1))
        out.append(transposition(2 * t, 2 * t + 2))
    return out
