import json

import pytest

from core.errors import OracleDisagreementError
from evaluation import RouteEvaluator
from intlinalg import GradedGroup


def _group(pieces):
    group = GradedGroup()
    for (i, j), (rank, torsion) in pieces.items():
        group.set_piece(i, j, rank, torsion)
    return group


def test_agreeing_routes(tmp_path):
    evaluator = RouteEvaluator(str(tmp_path))
    primary = _group({(0, 0): (1, ()), (0, -2): (0, ())})
    oracle = _group({(0, 0): (1, ())})
    verdict = evaluator.compare_routes(primary, oracle, label='bruteforce')
    assert verdict == {'route': 'bruteforce', 'coefficients': 'Z', 'agree': True, 'mismatches': []}
    evaluator.require_agreement(verdict)
    assert evaluator.comparisons == [verdict]


def test_torsion_counts_only_over_integers(tmp_path):
    evaluator = RouteEvaluator(str(tmp_path))
    primary = _group({(0, 0): (1, ())})
    oracle = _group({(0, 0): (1, (2,))})

    exact = evaluator.compare_routes(primary, oracle)
    assert not exact['agree']
    assert exact['mismatches'] == [{
        'i': 0, 'j': 0,
        'primary': {'rank': 1, 'torsion': []},
        'oracle': {'rank': 1, 'torsion': [2]},
    }]
    with pytest.raises(OracleDisagreementError) as info:
        evaluator.require_agreement(exact)
    assert info.value.exit_code == 4

    rational = evaluator.compare_routes(primary, oracle, over_rationals=True)
    assert rational['agree']
    assert rational['coefficients'] == 'Q'


def test_golden_round_trip_and_drift(tmp_path):
    evaluator = RouteEvaluator(str(tmp_path / 'golden'))
    report = {'invariant': 'demo', 'graded_ranks': [{'i': 0, 'j': 0, 'rank': 1, 'torsion': []}]}

    assert evaluator.golden_drift('demo', report) == [
        f"demo: no golden table at {tmp_path / 'golden' / 'demo.json'}"
    ]
    path = evaluator.write_golden('demo', report)
    with open(path, encoding='utf-8') as f:
        text = f.read()
    assert text == json.dumps(report, sort_keys=True, indent=2) + '\n'
    assert evaluator.load_golden('demo') == report
    assert evaluator.golden_drift('demo', report) == []

    changed = dict(report, graded_ranks=[{'i': 0, 'j': 0, 'rank': 2, 'torsion': []}])
    assert evaluator.golden_drift('demo', changed) == ["demo: field 'graded_ranks' changed"]
    assert evaluator.load_golden('missing') is None
