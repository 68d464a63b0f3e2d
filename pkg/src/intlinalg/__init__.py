"""
Integer Linear Algebra Module for the Skein Lasagna Calculator

This module handles exact sparse integer matrices, Smith normal forms,
cokernels, integer kernels and graded abelian groups.
"""

from .matrix import IntMatrix
from .smith import SnfResult, smith_normal_form, check_capacity
from .lattice import (
    cokernel,
    CokernelMap,
    kernel_basis,
    solve_in_lattice,
    solve_unimodular_inverse,
    rational_rank,
)
from .graded import GradedGroup

__all__ = [
    'IntMatrix',
    'SnfResult',
    'smith_normal_form',
    'check_capacity',
    'cokernel',
    'CokernelMap',
    'kernel_basis',
    'solve_in_lattice',
    'solve_unimodular_inverse',
    'rational_rank',
    'GradedGroup',
]
