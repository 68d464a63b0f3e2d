"""
Presented Center

Handles the center Z(H^n) as square-free polynomials in X_1, ..., X_{2n} modulo
the relations Σ_{|I|=k, I⊇J} X_I = 0 (|J| < k), its admissible basis and the
reduction of elements to admissible coordinates.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Dict, List, Optional, Tuple

from core.errors import InvalidConfigError
from intlinalg import CokernelMap, GradedGroup, IntMatrix, smith_normal_form, solve_in_lattice

logger = logging.getLogger(__name__)

Subset = Tuple[int, ...]


@dataclass(frozen=True, order=True)
class SubsetMonomial:
    """Square-free monomial X_I, I ⊆ {1, ..., 2n}, of degree 2|I|."""
    subset: Subset
    n: int

    def __post_init__(self):
        if list(self.subset) != sorted(set(self.subset)):
            raise ValueError(f"Subset {self.subset} must be strictly increasing")
        if any(i < 1 or i > 2 * self.n for i in self.subset):
            raise ValueError(f"Subset {self.subset} outside 1..{2 * self.n}")

    @property
    def degree(self) -> int:
        return 2 * len(self.subset)

    def __str__(self) -> str:
        return ''.join(f"X{i}" for i in self.subset) or '1'


def is_admissible(subset: Subset) -> bool:
    """|I ∩ {1..m}| ≤ m/2 for every prefix m."""
    members = set(subset)
    count = 0
    for m in range(1, (max(subset) if subset else 0) + 1):
        count += m in members
        if 2 * count > m:
            return False
    return True


@dataclass(frozen=True, order=True)
class AdmissibleSubset(SubsetMonomial):
    """SubsetMonomial whose every prefix holds at most half of its points."""

    def __post_init__(self):
        super().__post_init__()
        if not is_admissible(self.subset):
            raise ValueError(f"Subset {self.subset} is not admissible")


def subsets(n: int, k: int) -> List[Subset]:
    """k-subsets of 1..2n in lexicographic order."""
    return list(combinations(range(1, 2 * n + 1), k))


def relation_matrix(n: int, k: int) -> IntMatrix:
    """
    Columns Σ_{|I|=k, I⊇J} e_I for every J with |J| < k, rows the k-subsets.

    Args:
        n: Number of arcs
        k: Half the degree

    Returns:
        IntMatrix of shape C(2n, k) x #{J : |J| < k}
    """
    rows = {s: i for i, s in enumerate(subsets(n, k))}
    columns = []
    for size in range(k):
        for j_set in subsets(n, size):
            js = set(j_set)
            columns.append({rows[s]: 1 for s in rows if js.issubset(s)})
    return IntMatrix.from_columns(len(rows), columns)


def expected_rank(n: int, k: int) -> int:
    """C(2n, k) − C(2n, k−1) for k ≤ n, zero above."""
    if k < 0 or k > n:
        return 0
    return comb(2 * n, k) - (comb(2 * n, k - 1) if k else 0)


class CenterPresentation:
    """
    One graded piece Z(H^n)_{2k} of the presented center.

    Features:
    - Relation matrix on degree-2k square-free monomials
    - Cokernel structure as a GradedGroup piece at (0, 2k)
    - Free coordinates of monomial vectors
    - Reduction to admissible-basis coordinates by an exact lattice solve
    """

    def __init__(self, n: int, k: int):
        if n < 0 or not 0 <= k <= 2 * n:
            raise InvalidConfigError(f"Need 0 <= k <= 2n, got n={n}, k={k}", {'n': n, 'k': k})
        self.n = n
        self.k = k
        self.monomials = subsets(n, k)
        self.index = {s: i for i, s in enumerate(self.monomials)}
        self.relations = relation_matrix(n, k)
        self.quotient = CokernelMap(self.relations)
        self.free_rank = self.quotient.free_rank
        self.torsion = self.quotient.torsion
        self._admissible_matrix: Optional[IntMatrix] = None
        self._admissible_snf = None
        logger.info(f"Presented Z(H^{n})_{2 * k}: {len(self.monomials)} monomials, "
                    f"{self.relations.cols} relations, rank {self.free_rank}")

    @property
    def group(self) -> GradedGroup:
        group = GradedGroup()
        group.set_piece(0, 2 * self.k, self.free_rank, self.torsion)
        return group

    def vector(self, terms: Dict[Subset, int]) -> Dict[int, int]:
        return {self.index[tuple(sorted(s))]: v for s, v in terms.items() if v}

    def coordinates(self, terms: Dict[Subset, int]) -> Tuple[int, ...]:
        """Free coordinates of a combination of monomials."""
        return self.quotient.free_coordinates(self.vector(terms))

    def is_zero(self, terms: Dict[Subset, int]) -> bool:
        return self.quotient.is_zero(self.vector(terms))

    @property
    def admissible(self) -> List['AdmissibleSubset']:
        return admissible_basis(self.n, self.k)

    def admissible_matrix(self) -> IntMatrix:
        """Columns: free coordinates of the admissible monomials."""
        if self._admissible_matrix is None:
            columns = []
            for a in self.admissible:
                coords = self.coordinates({a.subset: 1})
                columns.append({i: v for i, v in enumerate(coords) if v})
            self._admissible_matrix = IntMatrix.from_columns(self.free_rank, columns)
        return self._admissible_matrix

    def admissible_is_basis(self) -> bool:
        """True when the admissible coordinate matrix is square and unimodular."""
        matrix = self.admissible_matrix()
        if matrix.rows != matrix.cols:
            return False
        snf = smith_normal_form(matrix, transforms=False)
        return snf.rank == matrix.rows and all(d == 1 for d in snf.diagonal)

    def reduce(self, terms: Dict[Subset, int]) -> Dict[Subset, int]:
        """
        Admissible-basis coordinates of a combination of monomials.

        Args:
            terms: Map from subsets to coefficients

        Returns:
            Map from admissible subsets to nonzero coefficients
        """
        coords = self.coordinates(terms)
        if self._admissible_snf is None:
            self._admissible_snf = smith_normal_form(self.admissible_matrix(), transforms=True)
        solution = solve_in_lattice(self.admissible_matrix(),
                                    {i: v for i, v in enumerate(coords) if v},
                                    self._admissible_snf)
        if solution is None:
            raise ArithmeticError(f"Admissible monomials do not span Z(H^{self.n})_{2 * self.k}")
        return {a.subset: c for a, c in zip(self.admissible, solution) if c}


@lru_cache(maxsize=None)
def center_presented(n: int, k: int) -> CenterPresentation:
    """
    The piece Z(H^n)_{2k} of the presented center (cached per (n, k)).

    Args:
        n: Number of arcs
        k: Half the degree, 0 ≤ k ≤ 2n

    Returns:
        CenterPresentation with the relation matrix and cokernel structure
    """
    return CenterPresentation(n, k)


def center_ranks(n: int) -> GradedGroup:
    """All pieces Z(H^n)_{2k}, k = 0..2n."""
    group = GradedGroup()
    for k in range(2 * n + 1):
        piece = center_presented(n, k)
        group.set_piece(0, 2 * k, piece.free_rank, piece.torsion)
    return group


def admissible_basis(n: int, k: int) -> List[AdmissibleSubset]:
    """Admissible k-subsets of 1..2n in lexicographic order."""
    if n < 0 or not 0 <= k <= 2 * n:
        raise InvalidConfigError(f"Need 0 <= k <= 2n, got n={n}, k={k}", {'n': n, 'k': k})
    return [AdmissibleSubset(s, n) for s in subsets(n, k) if is_admissible(s)]


class CenterElement:
    """
    Homogeneous element of Z(H^n)_{2k} given by a combination of monomials X_I.

    Two representatives are equal in the center when their difference reduces
    to zero.
    """

    def __init__(self, n: int, k: int, terms: Optional[Dict[Subset, int]] = None):
        self.n = n
        self.k = k
        self.terms: Dict[Subset, int] = {}
        for subset, value in (terms or {}).items():
            key = tuple(sorted(subset))
            if len(key) != k or len(set(key)) != k:
                raise ValueError(f"Monomial {subset} does not have {k} distinct variables")
            if any(i < 1 or i > 2 * n for i in key):
                raise ValueError(f"Monomial {subset} outside 1..{2 * n}")
            self.terms[key] = self.terms.get(key, 0) + value
        self.terms = {s: v for s, v in self.terms.items() if v}

    @classmethod
    def monomial(cls, n: int, subset: Subset, coefficient: int = 1) -> 'CenterElement':
        return cls(n, len(subset), {tuple(subset): coefficient})

    def __repr__(self) -> str:
        if not self.terms:
            return '0'
        return ' + '.join(f"{v}*" + (''.join(f"X{i}" for i in s) or '1')
                          for s, v in sorted(self.terms.items()))

    def __add__(self, other: 'CenterElement') -> 'CenterElement':
        if (self.n, self.k) != (other.n, other.k):
            raise ValueError("Elements live in different pieces")
        terms = dict(self.terms)
        for s, v in other.terms.items():
            terms[s] = terms.get(s, 0) + v
        return CenterElement(self.n, self.k, terms)

    def __sub__(self, other: 'CenterElement') -> 'CenterElement':
        return self + other.scaled(-1)

    def __mul__(self, other: 'CenterElement') -> 'CenterElement':
        if self.n != other.n:
            raise ValueError("Elements live in different rings")
        terms: Dict[Subset, int] = {}
        for s1, v1 in self.terms.items():
            for s2, v2 in other.terms.items():
                if set(s1) & set(s2):
                    continue
                key = tuple(sorted(s1 + s2))
                terms[key] = terms.get(key, 0) + v1 * v2
        return CenterElement(self.n, self.k + other.k, terms)

    def scaled(self, factor: int) -> 'CenterElement':
        return CenterElement(self.n, self.k, {s: factor * v for s, v in self.terms.items()})

    def reduced(self) -> Dict[Subset, int]:
        """Admissible-basis coordinates (empty above the top degree)."""
        if self.k > self.n:
            return {}
        return center_presented(self.n, self.k).reduce(self.terms)

    def is_zero(self) -> bool:
        if self.k > 2 * self.n:
            return True
        return center_presented(self.n, self.k).is_zero(self.terms)

    def equals(self, other: 'CenterElement') -> bool:
        """Equality in the center, not as representatives."""
        return (self - other).is_zero()
