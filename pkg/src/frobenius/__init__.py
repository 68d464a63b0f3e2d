"""
Frobenius Module for the Skein Lasagna Calculator

This module handles the rank-N Frobenius algebra and its tensor powers.
"""

from .algebra import FrobeniusAlgebra, FrobBasisElt
from .tensor import TensorElt, NEGATIVE, POSITIVE

__all__ = ['FrobeniusAlgebra', 'FrobBasisElt', 'TensorElt', 'NEGATIVE', 'POSITIVE']
