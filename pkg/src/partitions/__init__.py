"""
Partitions Module for the Skein Lasagna Calculator

This module handles bounded partition enumeration and generating-function
coefficients.
"""

from .enumeration import (
    BoundedPartition,
    enumerate_partitions,
    enumerate_up_to_length,
    count_P,
    closed_form_P,
)
from .series import convolve, geometric, partition_series, series_power

__all__ = [
    'BoundedPartition',
    'enumerate_partitions',
    'enumerate_up_to_length',
    'count_P',
    'closed_form_P',
    'convolve',
    'geometric',
    'partition_series',
    'series_power',
]
