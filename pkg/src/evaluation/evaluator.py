"""
Route Evaluator for the Skein Lasagna Calculator

Handles comparison of independently computed graded groups and regression
against stored golden tables.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional

from core.errors import OracleDisagreementError
from intlinalg import GradedGroup

logger = logging.getLogger(__name__)


class RouteEvaluator:
    """
    Evaluator for two-route agreement and golden-table drift.

    Features:
    - Exact comparison of free ranks and torsion per bidegree
    - Rational comparison (free ranks only)
    - Golden tables stored as sorted JSON, one file per case
    - Drift reports listing every changed field
    """

    def __init__(self, golden_dir: str = "data/golden"):
        self.golden_dir = Path(golden_dir)
        self.comparisons: List[Dict[str, Any]] = []

    def compare_routes(self, primary: GradedGroup, oracle: GradedGroup,
                       over_rationals: bool = False,
                       label: str = 'oracle') -> Dict[str, Any]:
        """
        Compare two graded groups on the union of their bidegrees.

        Args:
            primary: Result of the main route
            oracle: Result of the independent route
            over_rationals: Compare free ranks only
            label: Name of the oracle route, recorded in the verdict

        Returns:
            Agreement record with the list of mismatching bidegrees
        """
        mismatches = []
        keys = sorted(set(primary.pieces) | set(oracle.pieces), key=lambda b: (b[0], -b[1]))
        for i, j in keys:
            ours = (primary.rank(i, j), list(primary.torsion(i, j)))
            theirs = (oracle.rank(i, j), list(oracle.torsion(i, j)))
            if over_rationals:
                same = ours[0] == theirs[0]
            else:
                same = ours == theirs
            if not same:
                mismatches.append({
                    'i': i, 'j': j,
                    'primary': {'rank': ours[0], 'torsion': ours[1]},
                    'oracle': {'rank': theirs[0], 'torsion': theirs[1]},
                })
        verdict = {
            'route': label,
            'coefficients': 'Q' if over_rationals else 'Z',
            'agree': not mismatches,
            'mismatches': mismatches,
        }
        self.comparisons.append(verdict)
        if mismatches:
            logger.error(f"Routes disagree in {len(mismatches)} bidegrees against {label}")
        else:
            logger.info(f"Routes agree on {len(keys)} bidegrees against {label}")
        return verdict

    def require_agreement(self, verdict: Dict[str, Any]) -> None:
        """Raise OracleDisagreementError for a failed verdict."""
        if not verdict['agree']:
            raise OracleDisagreementError(
                f"{len(verdict['mismatches'])} bidegrees disagree with the {verdict['route']} route",
                {'mismatches': verdict['mismatches']},
            )

    def golden_path(self, name: str) -> Path:
        return self.golden_dir / f"{name}.json"

    def write_golden(self, name: str, report: Dict[str, Any]) -> str:
        """
        Store a report as the golden table for a case.

        Args:
            name: Case name
            report: Report document

        Returns:
            Path to the written file
        """
        self.golden_dir.mkdir(parents=True, exist_ok=True)
        path = self.golden_path(name)
        with open(path, 'w', encoding='utf-8') as f:
            f.write(json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + '\n')
        logger.info(f"Golden table written: {path}")
        return str(path)

    def load_golden(self, name: str) -> Optional[Dict[str, Any]]:
        path = self.golden_path(name)
        if not path.exists():
            return None
        with open(path, 'r', encoding='utf-8') as f:
            return json.load(f)

    def golden_drift(self, name: str, report: Dict[str, Any]) -> List[str]:
        """
        Differences between a fresh report and the stored golden table.

        Args:
            name: Case name
            report: Freshly computed report

        Returns:
            Human-readable differences, empty when nothing drifted
        """
        stored = self.load_golden(name)
        if stored is None:
            return [f"{name}: no golden table at {self.golden_path(name)}"]
        fresh = json.loads(json.dumps(report, sort_keys=True))
        drift = []
        for key in sorted(set(stored) | set(fresh)):
            if stored.get(key) != fresh.get(key):
                drift.append(f"{name}: field '{key}' changed")
        return drift
