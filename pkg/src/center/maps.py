"""
Stabilization Maps

Handles the maps ψ and φ from level n to level n+1: on the center for
positive framing and on the dual center for negative framing.
"""

import logging
from typing import Tuple

from core.errors import InvalidConfigError

from .dual import DualFunctional
from .presentation import CenterElement

logger = logging.getLogger(__name__)

CONJECTURED = 'conjectured'
FLIPPED = 'flipped'
SIGN_CONVENTIONS = (CONJECTURED, FLIPPED)


def sign_value(convention: str) -> int:
    """+1 for the conjectured signs (± is +, ∓ is −), −1 when flipped."""
    if convention == CONJECTURED:
        return 1
    if convention == FLIPPED:
        return -1
    raise InvalidConfigError(f"Unknown sign convention {convention!r}",
                             {'allowed': list(SIGN_CONVENTIONS)})


def psi_phi_positive(n: int, x: CenterElement,
                     convention: str = CONJECTURED) -> Tuple[CenterElement, CenterElement]:
    """
    ψ(X_I) = s·X_I(X_{2n+2} − X_{2n+1}) and φ(X_I) = −s·X_I·X_{2n+1}X_{2n+2}.

    Args:
        n: Level of the source
        x: Homogeneous element of Z(H^n)
        convention: Sign convention

    Returns:
        (ψ(x), φ(x)) in Z(H^{n+1}), of degrees raised by 2 and 4
    """
    if x.n != n:
        raise InvalidConfigError(f"Element lives in Z(H^{x.n}), expected Z(H^{n})")
    s = sign_value(convention)
    lifted = CenterElement(n + 1, x.k, x.terms)
    top, below = 2 * n + 2, 2 * n + 1
    psi = lifted * (CenterElement.monomial(n + 1, (top,)) - CenterElement.monomial(n + 1, (below,)))
    phi = lifted * CenterElement.monomial(n + 1, (below, top), -1)
    return psi.scaled(s), phi.scaled(s)


def psi_phi_negative(n: int, f: DualFunctional,
                     convention: str = CONJECTURED) -> Tuple[DualFunctional, DualFunctional]:
    """
    ψ(f) = s·f·(X_{2n+2}^∨ − X_{2n+1}^∨) and φ(f) = s·(f extended by zero).

    Args:
        n: Level of the source
        f: Functional in Z(H^n)^∨
        convention: Sign convention

    Returns:
        (ψ(f), φ(f)) as functionals on Z(H^{n+1})
    """
    if f.n != n:
        raise InvalidConfigError(f"Functional lives on Z(H^{f.n}), expected Z(H^{n})")
    s = sign_value(convention)
    lifted = f.extended(n + 1)
    difference = DualFunctional.variable(n + 1, 2 * n + 2) - DualFunctional.variable(n + 1, 2 * n + 1)
    return (lifted * difference).scaled(s), lifted.scaled(s)
