"""
Runtime Settings

Loads resource caps and defaults from the environment (and a local .env file).
"""

import logging
import os
from dataclasses import dataclass

from dotenv import load_dotenv

logger = logging.getLogger(__name__)

DEFAULT_MAX_DIM = 200000
DEFAULT_CENTER_MAX_N = 3


@dataclass(frozen=True)
class Settings:
    """
    Resource caps and paths.

    Features:
    - max_dim caps the nonzero entries of any relation matrix
    - center_max_n bounds the brute-force arc-ring center
    - golden_dir locates the reference tables
    """
    max_dim: int = DEFAULT_MAX_DIM
    center_max_n: int = DEFAULT_CENTER_MAX_N
    log_level: str = 'WARNING'
    golden_dir: str = 'data/golden'


def _int_from_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == '':
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning(f"Ignoring non-integer {name}={raw!r}, using {default}")
        return default
    if value <= 0:
        logger.warning(f"Ignoring non-positive {name}={value}, using {default}")
        return default
    return value


def load_settings() -> Settings:
    """
    Build Settings from the environment.

    Returns:
        Settings populated from LASAGNA_* variables, falling back to defaults
    """
    load_dotenv()
    return Settings(
        max_dim=_int_from_env('LASAGNA_MAX_DIM', DEFAULT_MAX_DIM),
        center_max_n=_int_from_env('LASAGNA_CENTER_MAX_N', DEFAULT_CENTER_MAX_N),
        log_level=os.getenv('LASAGNA_LOG_LEVEL', 'WARNING').upper(),
        golden_dir=os.getenv('LASAGNA_GOLDEN_DIR', 'data/golden'),
    )
