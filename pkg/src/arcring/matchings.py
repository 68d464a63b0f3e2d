"""
Crossingless Matchings

Handles non-crossing perfect matchings of the points 1, ..., 2n on a line and
the circles formed by gluing one matching to the reflection of another.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

logger = logging.getLogger(__name__)

Arc = Tuple[int, int]
Circle = Tuple[int, ...]


@dataclass(frozen=True, order=True)
class CrossinglessMatching:
    """
    A non-crossing perfect matching of 1..2n, arcs (i, j) with i < j sorted by i.

    Features:
    - Validation of perfectness and planarity
    - Partner lookup
    """
    arcs: Tuple[Arc, ...]

    def __post_init__(self):
        points = sorted(p for arc in self.arcs for p in arc)
        if points != list(range(1, 2 * len(self.arcs) + 1)):
            raise ValueError(f"Arcs {self.arcs} are not a perfect matching of 1..{2 * len(self.arcs)}")
        if any(i >= j for i, j in self.arcs) or list(self.arcs) != sorted(self.arcs):
            raise ValueError(f"Arcs {self.arcs} are not in canonical form")
        # bracket check: arcs open and close like balanced parentheses
        closing = {i: j for i, j in self.arcs}
        stack: List[int] = []
        for p in points:
            if p in closing:
                stack.append(closing[p])
            elif not stack or stack.pop() != p:
                raise ValueError(f"Arcs {self.arcs} cross")

    @classmethod
    def of(cls, arcs) -> 'CrossinglessMatching':
        return cls(tuple(sorted(tuple(sorted(arc)) for arc in arcs)))

    @property
    def n(self) -> int:
        return len(self.arcs)

    def partners(self) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for i, j in self.arcs:
            out[i] = j
            out[j] = i
        return out

    def partner(self, point: int) -> int:
        return self.partners()[point]

    def __str__(self) -> str:
        return '{' + ','.join(f"({i},{j})" for i, j in self.arcs) + '}'


def _matchings_of(points: Tuple[int, ...]) -> List[Tuple[Arc, ...]]:
    if not points:
        return [()]
    first = points[0]
    out = []
    for k in range(1, len(points), 2):
        inside = points[1:k]
        outside = points[k + 1:]
        for left in _matchings_of(inside):
            for right in _matchings_of(outside):
                out.append(((first, points[k]),) + left + right)
    return out


@lru_cache(maxsize=None)
def enumerate_matchings(n: int) -> Tuple[CrossinglessMatching, ...]:
    """
    All crossingless matchings of 2n points, in lexicographic order of arcs.

    Args:
        n: Number of arcs (≥ 0)

    Returns:
        Tuple of the Catalan-many matchings
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    found = [CrossinglessMatching.of(arcs) for arcs in _matchings_of(tuple(range(1, 2 * n + 1)))]
    return tuple(sorted(found))


@lru_cache(maxsize=None)
def compose_circles(a: CrossinglessMatching, b: CrossinglessMatching) -> Tuple[Circle, ...]:
    """
    Circles of the closed diagram b̄a.

    Each circle alternates between arcs of a and arcs of b and is reported as
    its sorted point set; circles are ordered by their smallest point.

    Args:
        a: Matching on top
        b: Matching reflected underneath

    Returns:
        Tuple of circles partitioning 1..2n
    """
    if a.n != b.n:
        raise ValueError(f"Matchings have different sizes {a.n} and {b.n}")
    pa, pb = a.partners(), b.partners()
    seen = set()
    circles = []
    for start in range(1, 2 * a.n + 1):
        if start in seen:
            continue
        circle = []
        point = start
        while True:
            circle.append(point)
            seen.add(point)
            across = pa[point]
            circle.append(across)
            seen.add(across)
            point = pb[across]
            if point == start:
                break
        circles.append(tuple(sorted(circle)))
    return tuple(sorted(circles))
