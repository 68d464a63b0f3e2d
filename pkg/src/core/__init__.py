"""
Core Module for the Skein Lasagna Calculator

This module handles runtime settings, the error hierarchy and logging setup
shared by every computation package.
"""

from .errors import (
    LasagnaError,
    InvalidConfigError,
    ResourceCapError,
    UnstableWindowError,
    OracleDisagreementError,
)
from .settings import Settings, load_settings
from .logging_setup import configure_logging

__all__ = [
    'LasagnaError',
    'InvalidConfigError',
    'ResourceCapError',
    'UnstableWindowError',
    'OracleDisagreementError',
    'Settings',
    'load_settings',
    'configure_logging',
]
