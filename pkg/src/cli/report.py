"""
Report Documents

Handles the report schema, validation and rendering as JSON, CSV or a table.
"""

import io
import json
import logging
from typing import Any, Dict, List, Optional

import jsonschema
import pandas as pd
from rich.console import Console
from rich.table import Table

from intlinalg import GradedGroup

logger = logging.getLogger(__name__)

_GRADED_RANKS: Dict[str, Any] = {
    'type': 'array',
    'items': {
        'type': 'object',
        'required': ['i', 'j', 'rank', 'torsion'],
        'additionalProperties': False,
        'properties': {
            'i': {'type': 'integer'},
            'j': {'type': 'integer'},
            'rank': {'type': 'integer', 'minimum': 0},
            'torsion': {'type': 'array', 'items': {'type': 'integer', 'minimum': 2}},
        },
    },
}

REPORT_SCHEMA: Dict[str, Any] = {
    '$schema': 'http://json-schema.org/draft-07/schema#',
    'title': 'Skein lasagna report',
    'type': 'object',
    'required': ['invariant', 'parameters', 'graded_ranks', 'stable', 'sign_convention'],
    'properties': {
        'invariant': {'type': 'string'},
        'parameters': {'type': 'object'},
        'graded_ranks': _GRADED_RANKS,
        'stable': {'type': 'boolean'},
        'sign_convention': {'type': ['string', 'null']},
        'oracle_agreement': {
            'type': 'object',
            'required': ['route', 'coefficients', 'agree', 'mismatches'],
            'properties': {
                'route': {'type': 'string'},
                'coefficients': {'enum': ['Z', 'Q']},
                'agree': {'type': 'boolean'},
                'mismatches': {'type': 'array'},
            },
        },
        'oracle_graded_ranks': _GRADED_RANKS,
        'unstable_degrees': {'type': 'array', 'items': {'type': 'integer'}},
        'exact_degrees': {'type': 'array', 'items': {'type': 'integer'}},
        'admissible_basis': {
            'type': 'object',
            'additionalProperties': {'type': 'array', 'items': {'type': 'string'}},
        },
    },
}


def build_report(invariant: str, parameters: Dict[str, Any], group: GradedGroup,
                 stable: bool, sign_convention: Optional[str] = None,
                 oracle_agreement: Optional[Dict[str, Any]] = None,
                 **extra: Any) -> Dict[str, Any]:
    """
    Assemble and validate a report document.

    Args:
        invariant: Name of the computed invariant
        parameters: Run parameters
        group: Graded group to report
        stable: Whether every reported degree is certified
        sign_convention: Sign convention, when it applies
        oracle_agreement: Verdict of the independent route, if run
        **extra: Additional schema fields (unstable_degrees, admissible_basis, ...)

    Returns:
        The validated report
    """
    report: Dict[str, Any] = {
        'invariant': invariant,
        'parameters': parameters,
        'graded_ranks': group.to_records(),
        'stable': stable,
        'sign_convention': sign_convention,
    }
    if oracle_agreement is not None:
        report['oracle_agreement'] = oracle_agreement
    report.update(extra)
    validate_report(report)
    return report


def validate_report(report: Dict[str, Any]) -> None:
    jsonschema.validate(instance=report, schema=REPORT_SCHEMA)


def to_json(report: Dict[str, Any]) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + '\n'


def to_frame(report: Dict[str, Any]) -> pd.DataFrame:
    """graded_ranks flattened into columns i, j, rank, torsion."""
    rows: List[Dict[str, Any]] = [
        {'i': r['i'], 'j': r['j'], 'rank': r['rank'], 'torsion': ' '.join(map(str, r['torsion']))}
        for r in report['graded_ranks']
    ]
    return pd.DataFrame(rows, columns=['i', 'j', 'rank', 'torsion'])


def to_csv(report: Dict[str, Any]) -> str:
    return to_frame(report).to_csv(index=False, lineterminator='\n')


def to_table(report: Dict[str, Any]) -> str:
    """Plain-text rich table of the graded ranks."""
    stability = 'stable' if report['stable'] else 'UNSTABLE'
    table = Table(title=f"{report['invariant']} ({stability})")
    for column in ('i', 'j', 'rank', 'torsion'):
        table.add_column(column, justify='right')
    for row in to_frame(report).itertuples(index=False):
        table.add_row(str(row.i), str(row.j), str(row.rank), row.torsion or '-')
    buffer = io.StringIO()
    console = Console(file=buffer, width=100, no_color=True, force_terminal=False)
    console.print(table)
    if 'oracle_agreement' in report:
        verdict = report['oracle_agreement']
        console.print(f"oracle ({verdict['route']}, over {verdict['coefficients']}): "
                      f"{'agree' if verdict['agree'] else 'DISAGREE'}")
    if report.get('admissible_basis'):
        for degree, monomials in sorted(report['admissible_basis'].items(), key=lambda kv: int(kv[0])):
            console.print(f"degree {degree}: {', '.join(monomials)}")
    return buffer.getvalue()


def render(report: Dict[str, Any], output_format: str) -> str:
    if output_format == 'json':
        return to_json(report)
    if output_format == 'csv':
        return to_csv(report)
    return to_table(report)
