"""
Generating Functions

Handles truncated integer power series: products of geometric factors and
convolutions, independent of the recursive partition counter.
"""

from typing import List, Sequence


def convolve(a: Sequence[int], b: Sequence[int], degree: int) -> List[int]:
    """Product of two power series truncated above x^degree."""
    out = [0] * (degree + 1)
    for i, x in enumerate(a[:degree + 1]):
        if not x:
            continue
        for j, y in enumerate(b[:degree + 1 - i]):
            out[i + j] += x * y
    return out


def geometric(step: int, degree: int) -> List[int]:
    """Coefficients of 1/(1 − x^step) up to x^degree."""
    return [1 if k % step == 0 else 0 for k in range(degree + 1)]


def partition_series(max_part: int, degree: int, spacing: int = 1) -> List[int]:
    """
    Coefficients of ∏_{k=1}^{max_part} 1/(1 − x^{spacing·k}) up to x^degree.

    Args:
        max_part: Number of geometric factors
        degree: Truncation degree
        spacing: 1 for the partition count, 2 for the quantum-graded series

    Returns:
        Coefficient list of length degree + 1
    """
    series = [1] + [0] * degree
    for k in range(1, max_part + 1):
        series = convolve(series, geometric(spacing * k, degree), degree)
    return series


def series_power(series: Sequence[int], power: int, degree: int) -> List[int]:
    """k-fold convolution power, truncated."""
    out = [1] + [0] * degree
    for _ in range(power):
        out = convolve(out, series, degree)
    return out
