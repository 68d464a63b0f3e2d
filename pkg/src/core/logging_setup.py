"""
Logging Setup

Installs a rich handler on stderr so stdout carries only report output.
"""

import logging

from rich.console import Console
from rich.logging import RichHandler


def configure_logging(level: str = 'WARNING') -> None:
    """
    Configure root logging once for a CLI run.

    Args:
        level: Logging level name (DEBUG, INFO, WARNING, ERROR)
    """
    numeric = getattr(logging, str(level).upper(), logging.WARNING)
    logging.basicConfig(
        level=numeric,
        format='%(message)s',
        datefmt='[%X]',
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )
