"""
Cabled Unlink Module for the Skein Lasagna Calculator

This module handles cabled Khovanov–Rozansky homology of 0-framed unknots and
unlinks by two independent routes: partition reduction and a brute-force
truncated quotient.
"""

from .levels import (
    CableLevel,
    PartitionPair,
    SymmetrizedBasisElt,
    level_basis,
    empty_pair,
    stabilization_bound,
    standard_degree,
    standard_to_vw,
    vw_to_standard,
)
from .maps import unlink_homology, with_local_unlink, psi_m_image, psi_m_map
from .direct import reduce_pair, normal_form_basis, cabled_direct
from .bruteforce import relation_matrix, cabled_bruteforce

__all__ = [
    'CableLevel',
    'PartitionPair',
    'SymmetrizedBasisElt',
    'level_basis',
    'empty_pair',
    'stabilization_bound',
    'standard_degree',
    'standard_to_vw',
    'vw_to_standard',
    'unlink_homology',
    'with_local_unlink',
    'psi_m_image',
    'psi_m_map',
    'reduce_pair',
    'normal_form_basis',
    'cabled_direct',
    'relation_matrix',
    'cabled_bruteforce',
]
