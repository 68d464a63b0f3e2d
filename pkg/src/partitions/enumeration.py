"""
Bounded Partitions

Handles enumeration and counting of partitions with bounded part size and
bounded number of parts.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Optional, Tuple

from core.errors import InvalidConfigError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class BoundedPartition:
    """Unordered partition with parts in [1, max_part], stored descending."""
    parts: Tuple[int, ...]
    max_part: int

    def __post_init__(self):
        if any(p < 1 or p > self.max_part for p in self.parts):
            raise ValueError(f"Parts {self.parts} outside [1, {self.max_part}]")
        if list(self.parts) != sorted(self.parts, reverse=True):
            raise ValueError(f"Parts {self.parts} are not sorted descending")

    @classmethod
    def of(cls, parts, max_part: int) -> 'BoundedPartition':
        return cls(tuple(sorted(parts, reverse=True)), max_part)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def add_part(self, part: int) -> 'BoundedPartition':
        """Partition with one more part; a part of size 0 adds nothing."""
        if part == 0:
            return self
        return BoundedPartition.of(self.parts + (part,), self.max_part)

    def remove_part(self, part: int) -> 'BoundedPartition':
        parts = list(self.parts)
        parts.remove(part)
        return BoundedPartition(tuple(parts), self.max_part)

    def __str__(self) -> str:
        return '+'.join(map(str, self.parts)) or '∅'


def _generate(q: int, largest: int, slots: Optional[int]) -> Iterator[Tuple[int, ...]]:
    if q == 0:
        yield ()
        return
    if slots == 0:
        return
    for part in range(min(q, largest), 0, -1):
        remaining = None if slots is None else slots - 1
        for tail in _generate(q - part, part, remaining):
            yield (part,) + tail


def enumerate_partitions(q: int, max_part: int,
                         max_parts: Optional[int] = None) -> List[BoundedPartition]:
    """
    All partitions of q with parts ≤ max_part and at most max_parts parts.

    Order is decreasing lexicographic in the parts tuple, so 2+1 precedes 1+1+1.

    Args:
        q: Size to partition (≥ 0)
        max_part: Largest allowed part (≥ 1)
        max_parts: Bound on the number of parts, None for unbounded

    Returns:
        List of BoundedPartition, empty when no partition exists
    """
    if q < 0:
        raise InvalidConfigError(f"Partition size must be nonnegative, got {q}", {'q': q})
    if max_part < 1:
        raise InvalidConfigError(f"Largest part must be at least 1, got {max_part}",
                                 {'max_part': max_part})
    if max_parts is not None and max_parts < 0:
        raise InvalidConfigError(f"Part-count bound must be nonnegative, got {max_parts}")
    return [BoundedPartition(parts, max_part) for parts in _generate(q, max_part, max_parts)]


def enumerate_up_to_length(max_part: int, max_parts: int) -> List[BoundedPartition]:
    """Every partition with at most max_parts parts of size ≤ max_part (a finite set)."""
    result: List[BoundedPartition] = []
    for q in range(max_part * max_parts + 1):
        result.extend(enumerate_partitions(q, max_part, max_parts))
    return result


@lru_cache(maxsize=None)
def _count(q: int, largest: int) -> int:
    if q == 0:
        return 1
    if largest == 0:
        return 0
    if largest > q:
        return _count(q, q)
    return _count(q - largest, largest) + _count(q, largest - 1)


def count_P(q: int, max_part: int) -> int:
    """
    Number of partitions of q into parts of size at most max_part.

    Args:
        q: Size (≥ 0)
        max_part: Largest allowed part

    Returns:
        The partition count P_{max_part}(q)
    """
    if q < 0:
        raise InvalidConfigError(f"Partition size must be nonnegative, got {q}", {'q': q})
    if max_part < 1:
        return 1 if q == 0 else 0
    return _count(q, max_part)


def closed_form_P(q: int, max_part: int) -> int:
    """P_1(q) = 1 and P_2(q) = 1 + ⌊q/2⌋."""
    if max_part == 1:
        return 1
    if max_part == 2:
        return 1 + q // 2
    raise InvalidConfigError(f"No closed form implemented for max_part={max_part}")
