"""
Dual Center

Handles integer functionals on degree-2k square-free monomials, the dual
center Z(H^n)^∨_{2k} cut out by the dual relations, the functionals f_𝐦 of
partial matchings and the span check for balanced matchings.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Dict, List, Optional, Tuple

from core.errors import InvalidConfigError
from intlinalg import IntMatrix, kernel_basis, smith_normal_form, solve_in_lattice

from .presentation import Subset, relation_matrix, subsets

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


class DualFunctional:
    """
    Integer combination of dual monomials X_I^∨ with |I| = k on 1..2n.

    Features:
    - Evaluation on monomials: X_I^∨(X_J) = δ_IJ
    - Product X_I^∨·X_J^∨ = X_{I∪J}^∨ for disjoint I, J, zero otherwise
    - Relabeling under point permutations
    """

    def __init__(self, n: int, k: int, terms: Optional[Dict[Subset, int]] = None):
        self.n = n
        self.k = k
        self.terms: Dict[Subset, int] = {}
        for subset, value in (terms or {}).items():
            key = tuple(sorted(subset))
            if len(key) != k or len(set(key)) != k:
                raise ValueError(f"Dual monomial {subset} does not have {k} distinct points")
            if any(i < 1 or i > 2 * n for i in key):
                raise ValueError(f"Dual monomial {subset} outside 1..{2 * n}")
            if value:
                self.terms[key] = self.terms.get(key, 0) + value
        self.terms = {s: v for s, v in self.terms.items() if v}

    @classmethod
    def unit(cls, n: int) -> 'DualFunctional':
        """The functional (X_∅)^∨ = 1."""
        return cls(n, 0, {(): 1})

    @classmethod
    def variable(cls, n: int, i: int) -> 'DualFunctional':
        return cls(n, 1, {(i,): 1})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DualFunctional):
            return NotImplemented
        return (self.n, self.k, self.terms) == (other.n, other.k, other.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return '0'
        return ' + '.join(
            f"{v}*" + ''.join(f"X{i}^" for i in s) for s, v in sorted(self.terms.items())
        )

    def __call__(self, subset: Subset) -> int:
        return self.terms.get(tuple(sorted(subset)), 0)

    def __add__(self, other: 'DualFunctional') -> 'DualFunctional':
        self._check_compatible(other)
        terms = dict(self.terms)
        for s, v in other.terms.items():
            terms[s] = terms.get(s, 0) + v
        return DualFunctional(self.n, self.k, terms)

    def __sub__(self, other: 'DualFunctional') -> 'DualFunctional':
        return self + other.scaled(-1)

    def __mul__(self, other: 'DualFunctional') -> 'DualFunctional':
        if self.n != other.n:
            raise ValueError("Functionals live on different point sets")
        terms: Dict[Subset, int] = {}
        for s1, v1 in self.terms.items():
            for s2, v2 in other.terms.items():
                if set(s1) & set(s2):
                    continue
                key = tuple(sorted(s1 + s2))
                terms[key] = terms.get(key, 0) + v1 * v2
        return DualFunctional(self.n, self.k + other.k, terms)

    def _check_compatible(self, other: 'DualFunctional') -> None:
        if (self.n, self.k) != (other.n, other.k):
            raise ValueError(f"Incompatible functionals ({self.n},{self.k}) and ({other.n},{other.k})")

    def scaled(self, factor: int) -> 'DualFunctional':
        return DualFunctional(self.n, self.k, {s: factor * v for s, v in self.terms.items()})

    def extended(self, n: int) -> 'DualFunctional':
        """Same coefficients, viewed on the larger point set 1..2n."""
        return DualFunctional(n, self.k, self.terms)

    def vector(self) -> Dict[int, int]:
        index = {s: i for i, s in enumerate(subsets(self.n, self.k))}
        return {index[s]: v for s, v in self.terms.items()}

    def is_zero(self) -> bool:
        return not self.terms


@dataclass(frozen=True)
class PartialMatching:
    """
    Disjoint ordered pairs (i, j); f_𝐦 takes X_i^∨ − X_j^∨ for each pair.

    A matching is balanced when each pair joins an odd and an even point.
    """
    pairs: Tuple[Pair, ...]

    def __post_init__(self):
        points = [p for pair in self.pairs for p in pair]
        if len(points) != len(set(points)):
            raise InvalidConfigError(f"Pairs {self.pairs} are not disjoint")
        if any(p < 1 for p in points):
            raise InvalidConfigError(f"Pairs {self.pairs} contain a nonpositive point")

    @property
    def balanced(self) -> bool:
        return all((i + j) % 2 == 1 for i, j in self.pairs)

    @property
    def size(self) -> int:
        return len(self.pairs)

    def with_pair(self, pair: Pair) -> 'PartialMatching':
        return PartialMatching(self.pairs + (pair,))


def matching_functional(matching: PartialMatching, n: Optional[int] = None) -> DualFunctional:
    """
    f_𝐦 = Π_s (X_{i_s}^∨ − X_{j_s}^∨).

    Args:
        matching: Partial matching of points
        n: Point set 1..2n (defaults to the smallest that contains the pairs)

    Returns:
        DualFunctional of degree |𝐦| with 2^|𝐦| terms of coefficient ±1
    """
    top = max((p for pair in matching.pairs for p in pair), default=0)
    n = (top + 1) // 2 if n is None else n
    if 2 * n < top:
        raise InvalidConfigError(f"Point {top} outside 1..{2 * n}")
    result = DualFunctional.unit(n)
    for i, j in matching.pairs:
        result = result * (DualFunctional.variable(n, i) - DualFunctional.variable(n, j))
    return result


def dual_membership(f: DualFunctional, n: int, k: int) -> bool:
    """
    True when f kills every relation Σ_{|I|=k, I⊇J} X_I with |J| < k.

    Args:
        f: Functional on degree-2k monomials
        n: Number of arcs
        k: Half the degree

    Returns:
        Whether f lies in Z(H^n)^∨_{2k}
    """
    if (f.n, f.k) != (n, k):
        raise InvalidConfigError(f"Functional lives on ({f.n},{f.k}), expected ({n},{k})")
    for size in range(k):
        for j_set in combinations(range(1, 2 * n + 1), size):
            js = set(j_set)
            if sum(v for s, v in f.terms.items() if js.issubset(s)):
                return False
    return True


class DualCenter:
    """
    The lattice Z(H^n)^∨_{2k} inside the functionals on degree-2k monomials.

    Features:
    - Lattice basis from the integer kernel of the transposed relation matrix
    - Exact lattice coordinates of member functionals
    """

    def __init__(self, n: int, k: int):
        if n < 0 or not 0 <= k <= 2 * n:
            raise InvalidConfigError(f"Need 0 <= k <= 2n, got n={n}, k={k}", {'n': n, 'k': k})
        self.n = n
        self.k = k
        self.monomials = subsets(n, k)
        kernel = kernel_basis(relation_matrix(n, k).transpose())
        self.basis = [
            DualFunctional(n, k, {self.monomials[i]: v for i, v in vector.items()})
            for vector in kernel
        ]
        self.basis_matrix = IntMatrix.from_columns(len(self.monomials), kernel)
        self._snf = smith_normal_form(self.basis_matrix, transforms=True)
        logger.info(f"Dual Z(H^{n})^v_{2 * k}: rank {self.rank}")

    @property
    def rank(self) -> int:
        return len(self.basis)

    def coordinates(self, f: DualFunctional) -> Optional[List[int]]:
        """Lattice coordinates of f, or None when f is not in the dual center."""
        if (f.n, f.k) != (self.n, self.k):
            raise InvalidConfigError(f"Functional lives on ({f.n},{f.k}), expected ({self.n},{self.k})")
        return solve_in_lattice(self.basis_matrix, f.vector(), self._snf)


@lru_cache(maxsize=None)
def dual_center(n: int, k: int) -> DualCenter:
    return DualCenter(n, k)


def balanced_matchings(n: int, k: int) -> List[PartialMatching]:
    """Every balanced partial matching of size k as (odd, even) pairs, canonically ordered."""
    odds = range(1, 2 * n + 1, 2)
    evens = range(2, 2 * n + 1, 2)
    found = []
    for odd_choice in combinations(odds, k):
        for even_choice in combinations(evens, k):
            for arrangement in permutations(even_choice):
                found.append(PartialMatching(tuple(zip(odd_choice, arrangement))))
    return found


def balanced_span_check(n: int, k: int) -> bool:
    """
    Whether the functionals f_𝐦 of balanced matchings span Z(H^n)^∨_{2k} over ℤ.

    Args:
        n: Number of arcs
        k: Half the degree, k ≤ n

    Returns:
        True when the coordinate matrix has full rank and all divisors equal 1
    """
    if not 0 <= k <= n:
        raise InvalidConfigError(f"Need 0 <= k <= n, got n={n}, k={k}", {'n': n, 'k': k})
    lattice = dual_center(n, k)
    columns = []
    for matching in balanced_matchings(n, k):
        coords = lattice.coordinates(matching_functional(matching, n))
        if coords is None:
            logger.error(f"f_m for {matching.pairs} is outside the dual center")
            return False
        columns.append({i: v for i, v in enumerate(coords) if v})
    matrix = IntMatrix.from_columns(lattice.rank, columns)
    snf = smith_normal_form(matrix, transforms=False)
    return snf.rank == lattice.rank and all(d == 1 for d in snf.diagonal)
