"""
Setup script for the Skein Lasagna Calculator

Initializes the data directories and writes the golden reference tables.
"""

import logging
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent / "src"))

from cli import golden_configs, run  # noqa: E402
from core import configure_logging, load_settings  # noqa: E402
from evaluation import RouteEvaluator  # noqa: E402

logger = logging.getLogger(__name__)


def initialize_directories(golden_dir: str) -> None:
    """Create the data directories."""
    for directory in (golden_dir, "data/reports"):
        Path(directory).mkdir(parents=True, exist_ok=True)
        logger.info(f"Created directory: {directory}")


def write_golden_tables(golden_dir: str) -> int:
    """
    Compute every golden case and store its report.

    Args:
        golden_dir: Target directory

    Returns:
        Number of tables written
    """
    settings = load_settings()
    evaluator = RouteEvaluator(golden_dir)
    cases = golden_configs()
    for name, config in cases.items():
        report = run(config, settings, evaluator)
        evaluator.write_golden(name, report)
        logger.info(f"Golden table for {name}: {len(report['graded_ranks'])} degrees")
    return len(cases)


def main():
    """Main setup function."""
    settings = load_settings()
    configure_logging('INFO')
    logger.info("Starting Skein Lasagna Calculator setup...")

    try:
        initialize_directories(settings.golden_dir)
        count = write_golden_tables(settings.golden_dir)
        logger.info(f"Setup completed: {count} golden tables in {settings.golden_dir}")
        logger.info("You can now run: python app.py golden")
    except Exception as e:
        logger.error(f"Setup failed: {e}")
        raise


if __name__ == "__main__":
    main()
