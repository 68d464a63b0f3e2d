"""
Unlink Homology and Cable Maps

Handles the graded ranks of the unlink homology 𝒜^{⊗r−} ⊗ ℬ^{⊗r+} and the maps
ψ^{[m]} that add a pair of oppositely oriented strands carrying Δ(X^m).
"""

import logging
from typing import Dict

from core.errors import InvalidConfigError
from frobenius import FrobeniusAlgebra
from intlinalg import GradedGroup, IntMatrix

from .levels import CableLevel, PartitionPair, SymmetrizedBasisElt, level_basis

logger = logging.getLogger(__name__)


def unlink_homology(r_minus: int, r_plus: int, N: int) -> GradedGroup:
    """
    Graded ranks of the homology of the (r_minus + r_plus)-component unlink.

    The level shift is left to the caller; everything sits in homological
    degree 0.

    Args:
        r_minus: Number of negatively oriented components (𝒜 factors)
        r_plus: Number of positively oriented components (ℬ factors)
        N: Rank of the Frobenius algebra

    Returns:
        GradedGroup with free pieces at (0, j)
    """
    if r_minus < 0 or r_plus < 0:
        raise InvalidConfigError("Component counts must be nonnegative",
                                 {'r_minus': r_minus, 'r_plus': r_plus})
    algebra = FrobeniusAlgebra(N)
    ranks: Dict[int, int] = {0: 1}
    for _ in range(r_minus + r_plus):
        step: Dict[int, int] = {}
        for degree, count in ranks.items():
            for x in algebra.basis():
                key = degree + x.quantum_degree
                step[key] = step.get(key, 0) + count
        ranks = step
    group = GradedGroup()
    for j, rank in ranks.items():
        group.set_piece(0, j, rank)
    return group


def with_local_unlink(group: GradedGroup, components: int, N: int) -> GradedGroup:
    """Tensor a graded group with the homology of a local unlink, over ℚ."""
    return group.tensor(unlink_homology(components, 0, N))


def psi_m_image(m: int, elt: SymmetrizedBasisElt, component: int,
                N: int) -> Dict[SymmetrizedBasisElt, int]:
    """
    ψ^{[m]} on one orbit basis element, in the V/W basis.

    Δ(X^m) = Σ_k X^{k+m} ⊗ X^{N−1−k} puts V^{N−1−k−m} on the new negative strand
    and W^k on the new positive strand; exponent 0 adds no part.

    Args:
        m: Label of the map, 0 ≤ m ≤ N−1
        elt: Source basis element
        component: Component receiving the new strand pair
        N: Rank

    Returns:
        Map from target basis elements to coefficients
    """
    if not 0 <= m <= N - 1:
        raise InvalidConfigError(f"Map label m={m} outside [0, {N - 1}]", {'m': m, 'N': N})
    pair = elt.pairs[component]
    image: Dict[SymmetrizedBasisElt, int] = {}
    for k in range(N - m):
        target = PartitionPair(pair.d.add_part(N - 1 - k - m), pair.e.add_part(k))
        key = elt.with_pair(component, target)
        image[key] = image.get(key, 0) + 1
    return image


def psi_m_map(m: int, source: CableLevel, component: int = 0) -> IntMatrix:
    """
    Matrix of ψ^{[m]} from a level to the level with r_component raised by one.

    Rows follow level_basis(target), columns follow level_basis(source). In the
    shifted grading ψ^{[N−1]} preserves degree and ψ^{[m]} lowers it by
    2(N−1−m).

    Args:
        m: Label of the map
        source: Source level
        component: Component index

    Returns:
        IntMatrix over the symmetrized bases
    """
    if not 0 <= component < source.components:
        raise InvalidConfigError(f"Component {component} out of range")
    target = source.raised(component)
    rows = {elt: i for i, elt in enumerate(level_basis(target))}
    cols = level_basis(source)
    matrix = IntMatrix(len(rows), len(cols))
    for j, elt in enumerate(cols):
        for image, coefficient in psi_m_image(m, elt, component, source.N).items():
            matrix[rows[image], j] = matrix[rows[image], j] + coefficient
    logger.debug(f"psi^[{m}] on level {source.r}: {matrix}")
    return matrix
