import pytest

from center import CONJECTURED, FLIPPED
from colimit import (
    NEGATIVE,
    POSITIVE,
    TruncatedSystem,
    cabled_khr2_framed_unknot,
    negative_degree,
    positive_degree,
    torus_piece_ranks,
)
from core.errors import InvalidConfigError, UnstableWindowError
from intlinalg import GradedGroup


@pytest.mark.parametrize(
    'kwargs',
    [
        {'p_sign': 'zero', 'n_max': 2, 'j_window': (-4, 0)},
        {'p_sign': NEGATIVE, 'n_max': -1, 'j_window': (-4, 0)},
        {'p_sign': NEGATIVE, 'n_max': 2, 'j_window': (0, -4)},
        {'p_sign': NEGATIVE, 'n_max': 2, 'j_window': (-4, 0), 'sign_convention': 'mixed'},
        {'p_sign': NEGATIVE, 'n_max': 2, 'j_window': (-4, 0), 'N': 3},
        {'p_sign': POSITIVE, 'n_max': 2, 'j_window': (-4, 0), 'alpha': 1},
    ],
)
def test_truncated_system_validation(kwargs):
    with pytest.raises(InvalidConfigError):
        TruncatedSystem(**kwargs)


def test_degrees_and_piece_index():
    system = TruncatedSystem(NEGATIVE, 3, (-6, 0))
    assert system.degrees() == [0, -2, -4, -6]
    assert TruncatedSystem(NEGATIVE, 3, (-5, 1)).degrees() == [0, -2, -4]
    assert system.piece_k(3, -4) == 2
    assert TruncatedSystem(POSITIVE, 3, (-6, 0)).piece_k(3, -4) == 4
    assert system.truncated(2).n_max == 2


def test_torus_piece_ranks():
    positive = torus_piece_ranks(2, POSITIVE)
    assert {j: positive.rank(0, j) for j in (-4, -2, 0)} == {-4: 1, -2: 3, 0: 2}
    negative = torus_piece_ranks(2, NEGATIVE)
    assert {j: negative.rank(0, j) for j in (4, 2, 0)} == {4: 1, 2: 3, 0: 2}
    with pytest.raises(InvalidConfigError):
        torus_piece_ranks(2, 'zero')


def test_negative_framing_leaves_one_class():
    result = cabled_khr2_framed_unknot(TruncatedSystem(NEGATIVE, 3, (-6, 0)))
    assert result.group.rank(0, 0) == 1
    assert all(result.group.rank(0, j) == 0 for j in (-2, -4, -6))
    assert result.group.is_free()
    assert result.all_stable
    assert result.unstable_degrees() == []


@pytest.mark.parametrize('p_sign', [POSITIVE, NEGATIVE])
def test_results_do_not_depend_on_sign_convention(p_sign):
    conjectured = cabled_khr2_framed_unknot(TruncatedSystem(p_sign, 4, (-8, 0), CONJECTURED))
    flipped = cabled_khr2_framed_unknot(TruncatedSystem(p_sign, 4, (-8, 0), FLIPPED))
    assert conjectured.group.pieces == flipped.group.pieces


def test_positive_framing_vanishes():
    result = cabled_khr2_framed_unknot(TruncatedSystem(POSITIVE, 4, (-8, 0)))
    assert result.group.nonzero() == {}
    assert all(result.exact.values())


def test_positive_exactness_certificate():
    result = cabled_khr2_framed_unknot(TruncatedSystem(POSITIVE, 2, (-8, 0)), allow_unstable=True)
    assert result.exact == {0: True, -2: True, -4: True, -6: False, -8: False}


def test_single_degree_helpers():
    assert positive_degree(0, 4, CONJECTURED) == (0, ())
    assert negative_degree(0, 2, CONJECTURED) == (1, ())
    assert negative_degree(2, 2, CONJECTURED) == (0, ())


def test_unstable_window_is_reported():
    system = TruncatedSystem(NEGATIVE, 0, (-2, 0))
    with pytest.raises(UnstableWindowError) as info:
        cabled_khr2_framed_unknot(system)
    assert info.value.exit_code == 2
    assert info.value.details['unstable_degrees'] == [-2]
    result = cabled_khr2_framed_unknot(system, allow_unstable=True)
    assert not result.all_stable


def test_degree_without_a_top_level_piece_is_not_certified():
    result = cabled_khr2_framed_unknot(TruncatedSystem(NEGATIVE, 1, (-4, 0)), allow_unstable=True)
    assert result.unstable_degrees() == [-4]
    assert result.stable[0] and result.stable[-2]


def test_empty_lower_level_compares_with_the_next_truncation():
    # level 1 has no piece in degree −4, so n_max = 2 is checked against n_max = 3
    result = cabled_khr2_framed_unknot(TruncatedSystem(NEGATIVE, 2, (-4, -4)))
    assert result.stable == {-4: True}
    assert result.group.rank(0, -4) == 0
    assert negative_degree(-4, 3, CONJECTURED) == (0, ())


def test_negative_framing_is_exact_in_positive_degrees():
    result = cabled_khr2_framed_unknot(TruncatedSystem(NEGATIVE, 0, (0, 2)))
    assert result.exact == {2: True, 0: False}
    assert result.all_stable


@pytest.mark.parametrize('j', [0, -2, -4, -6])
def test_negative_truncations_stabilize_monotonically(j):
    k = -j // 2
    pieces = [negative_degree(j, n_max, CONJECTURED) for n_max in range(1, 5)]
    with_piece = [p for n_max, p in zip(range(1, 5), pieces) if n_max >= k]
    # once the top level carries a piece the value never moves again
    assert len(set(with_piece)) == 1
    assert with_piece[0] == ((1, ()) if j == 0 else (0, ()))


@pytest.mark.parametrize('j', [0, -2, -4, -6])
def test_positive_truncations_agree_once_exact(j):
    first_exact = -j // 2
    pieces = {positive_degree(j, n_max, CONJECTURED) for n_max in range(max(first_exact, 1), 5)}
    assert pieces == {(0, ())}


@pytest.mark.parametrize('p_sign', [POSITIVE, NEGATIVE])
def test_level_generators_are_checked_against_torus_ranks(monkeypatch, p_sign):
    monkeypatch.setattr('colimit.framed.torus_piece_ranks', lambda n, sign: GradedGroup())
    with pytest.raises(ArithmeticError, match='torus cable rank'):
        if p_sign == POSITIVE:
            positive_degree(-4, 2, CONJECTURED)
        else:
            negative_degree(0, 1, CONJECTURED)
