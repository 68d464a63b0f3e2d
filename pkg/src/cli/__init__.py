"""
CLI Module for the Skein Lasagna Calculator

This module handles run configuration, dispatch and report rendering.
"""

from .config import RunConfig, SUBCOMMANDS, FORMATS, golden_configs
from .report import REPORT_SCHEMA, build_report, validate_report, render, to_json, to_csv, to_table
from .runner import run

__all__ = [
    'RunConfig',
    'SUBCOMMANDS',
    'FORMATS',
    'golden_configs',
    'REPORT_SCHEMA',
    'build_report',
    'validate_report',
    'render',
    'to_json',
    'to_csv',
    'to_table',
    'run',
]
