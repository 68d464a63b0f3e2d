"""
Center Module for the Skein Lasagna Calculator

This module handles the presented center Z(H^n), its admissible basis, the
dual center with matching functionals, the symmetric-group action and the
stabilization maps ψ and φ.
"""

from .presentation import (
    SubsetMonomial,
    AdmissibleSubset,
    CenterPresentation,
    CenterElement,
    is_admissible,
    subsets,
    relation_matrix,
    expected_rank,
    center_presented,
    center_ranks,
    admissible_basis,
)
from .dual import (
    DualFunctional,
    PartialMatching,
    DualCenter,
    dual_center,
    matching_functional,
    dual_membership,
    balanced_matchings,
    balanced_span_check,
)
from .action import parity_permutation, transposition, symmetric_action, adjacent_generators
from .maps import (
    CONJECTURED,
    FLIPPED,
    SIGN_CONVENTIONS,
    sign_value,
    psi_phi_positive,
    psi_phi_negative,
)

__all__ = [
    'SubsetMonomial',
    'AdmissibleSubset',
    'CenterPresentation',
    'CenterElement',
    'is_admissible',
    'subsets',
    'relation_matrix',
    'expected_rank',
    'center_presented',
    'center_ranks',
    'admissible_basis',
    'DualFunctional',
    'PartialMatching',
    'DualCenter',
    'dual_center',
    'matching_functional',
    'dual_membership',
    'balanced_matchings',
    'balanced_span_check',
    'parity_permutation',
    'transposition',
    'symmetric_action',
    'adjacent_generators',
    'CONJECTURED',
    'FLIPPED',
    'SIGN_CONVENTIONS',
    'sign_value',
    'psi_phi_positive',
    'psi_phi_negative',
]
