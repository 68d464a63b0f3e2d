"""
Graded Abelian Groups

Handles finitely generated bigraded abelian groups: a free rank and a torsion
divisor chain per bidegree (i, j).
"""

from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Sequence, Tuple

Bidegree = Tuple[int, int]
Piece = Tuple[int, Tuple[int, ...]]


def _normalize_torsion(torsion: Sequence[int]) -> Tuple[int, ...]:
    divisors = tuple(sorted(abs(int(d)) for d in torsion if abs(d) > 1))
    for a, b in zip(divisors, divisors[1:]):
        if b % a:
            raise ValueError(f"Torsion divisors {divisors} do not form a divisor chain")
    return divisors


@dataclass
class GradedGroup:
    """
    Bigraded abelian group with explicit zero pieces allowed.

    Features:
    - Per-bidegree free rank and invariant-factor torsion
    - Canonical iteration order (i ascending, j descending)
    - Tensor product of free groups over ℚ
    """
    pieces: Dict[Bidegree, Piece] = field(default_factory=dict)

    def set_piece(self, i: int, j: int, free_rank: int, torsion: Sequence[int] = ()) -> None:
        if free_rank < 0:
            raise ValueError(f"Negative free rank at ({i}, {j})")
        self.pieces[(i, j)] = (int(free_rank), _normalize_torsion(torsion))

    def rank(self, i: int, j: int) -> int:
        return self.pieces.get((i, j), (0, ()))[0]

    def torsion(self, i: int, j: int) -> Tuple[int, ...]:
        return self.pieces.get((i, j), (0, ()))[1]

    def items(self) -> Iterator[Tuple[Bidegree, Piece]]:
        for key in sorted(self.pieces, key=lambda b: (b[0], -b[1])):
            yield key, self.pieces[key]

    def nonzero(self) -> Dict[Bidegree, Piece]:
        return {k: v for k, v in self.pieces.items() if v[0] or v[1]}

    def is_free(self) -> bool:
        return all(not torsion for _, torsion in self.pieces.values())

    def total_rank(self) -> int:
        return sum(rank for rank, _ in self.pieces.values())

    def same_as(self, other: 'GradedGroup') -> bool:
        """Equality of nonzero pieces, ignoring explicitly stored zeros."""
        return self.nonzero() == other.nonzero()

    def restricted(self, j_min: int) -> 'GradedGroup':
        return GradedGroup({k: v for k, v in self.pieces.items() if k[1] >= j_min})

    def tensor(self, other: 'GradedGroup') -> 'GradedGroup':
        """
        Tensor product over ℚ: free ranks convolve in both gradings.

        Torsion is discarded; the result is the graded rank of the rational
        tensor product.
        """
        out: Dict[Bidegree, int] = {}
        for (i1, j1), (r1, _) in self.pieces.items():
            for (i2, j2), (r2, _) in other.pieces.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + r1 * r2
        result = GradedGroup()
        for (i, j), rank in out.items():
            result.set_piece(i, j, rank)
        return result

    def to_records(self) -> List[Dict[str, object]]:
        return [
            {'i': i, 'j': j, 'rank': rank, 'torsion': list(torsion)}
            for (i, j), (rank, torsion) in self.items()
        ]
