import pytest

from core.errors import InvalidConfigError
from partitions import (
    BoundedPartition,
    closed_form_P,
    convolve,
    count_P,
    enumerate_partitions,
    enumerate_up_to_length,
    partition_series,
    series_power,
)


def test_enumeration_order():
    parts = [p.parts for p in enumerate_partitions(4, 2)]
    assert parts == [(2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_enumeration_with_part_count_bound():
    parts = [p.parts for p in enumerate_partitions(4, 3, max_parts=2)]
    assert parts == [(3, 1), (2, 2)]
    assert enumerate_partitions(5, 1, max_parts=4) == []
    assert [p.parts for p in enumerate_partitions(0, 3)] == [()]


@pytest.mark.parametrize('max_part', [1, 2, 3, 4])
@pytest.mark.parametrize('q', [0, 1, 5, 9])
def test_count_matches_enumeration(q, max_part):
    assert count_P(q, max_part) == len(enumerate_partitions(q, max_part))


@pytest.mark.parametrize('max_part', [1, 2, 3])
def test_count_matches_generating_function(max_part):
    series = partition_series(max_part, 12)
    assert series == [count_P(q, max_part) for q in range(13)]


@pytest.mark.parametrize('max_part', [1, 2])
def test_closed_form(max_part):
    assert [closed_form_P(q, max_part) for q in range(20)] == [count_P(q, max_part) for q in range(20)]


def test_closed_form_limited_to_small_parts():
    with pytest.raises(InvalidConfigError):
        closed_form_P(4, 3)


def test_known_counts():
    assert [count_P(q, 2) for q in range(7)] == [1, 1, 2, 2, 3, 3, 4]
    assert count_P(10, 10) == 42
    assert count_P(3, 0) == 0
    assert count_P(0, 0) == 1


def test_quantum_series_spacing():
    assert partition_series(1, 6, spacing=2) == [1, 0, 1, 0, 1, 0, 1]


def test_series_power_counts_pairs():
    ones = [1] * 6
    assert series_power(ones, 2, 5) == [1, 2, 3, 4, 5, 6]
    assert convolve([1, 1], [1, 1], 1) == [1, 2]


def test_up_to_length_is_finite_and_bounded():
    partitions = enumerate_up_to_length(2, 2)
    assert [p.parts for p in partitions] == [(), (1,), (2,), (1, 1), (2, 1), (2, 2)]


def test_bounded_partition_validation_and_edits():
    with pytest.raises(ValueError):
        BoundedPartition((1, 2), 2)
    with pytest.raises(ValueError):
        BoundedPartition((3,), 2)
    p = BoundedPartition.of([1, 2], 2)
    assert p.parts == (2, 1)
    assert p.add_part(0) is p
    assert p.add_part(2).parts == (2, 2, 1)
    assert p.remove_part(2).parts == (1,)
    assert (p.size, p.length) == (3, 2)
    assert str(BoundedPartition((), 2)) == '∅'


def test_negative_size_is_rejected():
    with pytest.raises(InvalidConfigError):
        enumerate_partitions(-1, 2)
