"""
Tensor Elements

Handles integer combinations of pure tensors of basis monomials, each factor
tagged with the orientation of its strand.
"""

from typing import Dict, Iterator, Tuple

NEGATIVE = 'A'
POSITIVE = 'B'

Factor = Tuple[str, int]
PureTensor = Tuple[Factor, ...]


class TensorElt:
    """
    Integer-linear combination of pure tensors X^{m_1} ⊗ … ⊗ X^{m_t}.

    Features:
    - Orientation tag per factor (A for negative strands, B for positive)
    - Tensor product and addition
    - Quantum degree of homogeneous elements
    """

    def __init__(self, N: int, terms: Dict[PureTensor, int] = None):
        self.N = N
        self.terms: Dict[PureTensor, int] = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def pure(cls, N: int, factors: PureTensor, coefficient: int = 1) -> 'TensorElt':
        return cls(N, {tuple(factors): coefficient})

    def __iter__(self) -> Iterator[Tuple[PureTensor, int]]:
        for key in sorted(self.terms):
            yield key, self.terms[key]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorElt):
            return NotImplemented
        return self.N == other.N and self.terms == other.terms

    def __repr__(self) -> str:
        if not self.terms:
            return '0'
        parts = []
        for key, c in self:
            mono = '⊗'.join(f"X^{m}" for _, m in key) or '1'
            parts.append(f"{c}*{mono}")
        return ' + '.join(parts)

    def __add__(self, other: 'TensorElt') -> 'TensorElt':
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, 0) + v
        return TensorElt(self.N, terms)

    def scaled(self, factor: int) -> 'TensorElt':
        return TensorElt(self.N, {k: factor * v for k, v in self.terms.items()})

    def tensor(self, other: 'TensorElt') -> 'TensorElt':
        terms: Dict[PureTensor, int] = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                key = k1 + k2
                terms[key] = terms.get(key, 0) + v1 * v2
        return TensorElt(self.N, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set:
        return {sum((1 - self.N) + 2 * m for _, m in key) for key in self.terms}

    def quantum_degree(self) -> int:
        """Degree of a homogeneous nonzero element."""
        degrees = self.degrees()
        if len(degrees) != 1:
            raise ValueError(f"Element is not homogeneous: degrees {sorted(degrees)}")
        return degrees.pop()
