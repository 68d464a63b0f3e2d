"""
Error Hierarchy

Structured failures raised by the library and mapped to exit codes by the CLI.
"""

from typing import Any, Dict, Optional


class LasagnaError(Exception):
    """Base class for every structured failure."""

    exit_code = 1

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_record(self) -> Dict[str, Any]:
        """Render the error as the JSON record printed on stderr."""
        return {
            'error': type(self).__name__,
            'message': self.message,
            'details': self.details,
        }


class InvalidConfigError(LasagnaError, ValueError):
    """Parameters outside the supported domain."""

    exit_code = 2


class UnstableWindowError(LasagnaError):
    """The requested degree window is not certified by the truncation."""

    exit_code = 2


class ResourceCapError(LasagnaError):
    """A matrix or brute-force dimension exceeds the configured cap."""

    exit_code = 3


class OracleDisagreementError(LasagnaError):
    """Two independent routes produced different graded groups."""

    exit_code = 4
