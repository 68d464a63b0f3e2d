"""
Colimit Module for the Skein Lasagna Calculator

This module handles the truncated quotient computing the cabled KhR_2 homology
of the p-framed unknot from center and dual-center pieces.
"""

from .system import TruncatedSystem, torus_piece_ranks, POSITIVE, NEGATIVE, P_SIGNS
from .framed import (
    FramedUnknotResult,
    positive_degree,
    negative_degree,
    cabled_khr2_framed_unknot,
)

__all__ = [
    'TruncatedSystem',
    'torus_piece_ranks',
    'POSITIVE',
    'NEGATIVE',
    'P_SIGNS',
    'FramedUnknotResult',
    'positive_degree',
    'negative_degree',
    'cabled_khr2_framed_unknot',
]
