"""
Arc Ring Module for the Skein Lasagna Calculator

This module handles Khovanov's arc ring H^n: crossingless matchings, the
TQFT multiplication, the X_i action and a brute-force center.
"""

from .matchings import CrossinglessMatching, enumerate_matchings, compose_circles
from .ring import (
    ONE,
    X,
    ArcBasis,
    ArcElement,
    arc_basis,
    idempotent,
    identity,
    multiply_basis,
    hn_multiply,
    xi_action,
    monomial_element,
)
from .center import commutator_matrix, center_bruteforce

__all__ = [
    'CrossinglessMatching',
    'enumerate_matchings',
    'compose_circles',
    'ONE',
    'X',
    'ArcBasis',
    'ArcElement',
    'arc_basis',
    'idempotent',
    'identity',
    'multiply_basis',
    'hn_multiply',
    'xi_action',
    'monomial_element',
    'commutator_matrix',
    'center_bruteforce',
]
