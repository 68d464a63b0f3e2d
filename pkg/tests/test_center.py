from itertools import combinations

import pytest

from center import (
    CONJECTURED,
    FLIPPED,
    CenterElement,
    DualFunctional,
    PartialMatching,
    admissible_basis,
    adjacent_generators,
    balanced_matchings,
    balanced_span_check,
    center_presented,
    center_ranks,
    dual_center,
    dual_membership,
    expected_rank,
    is_admissible,
    matching_functional,
    parity_permutation,
    psi_phi_negative,
    psi_phi_positive,
    relation_matrix,
    sign_value,
    subsets,
    symmetric_action,
    transposition,
)
from core.errors import InvalidConfigError


def test_center_ranks_two_arcs():
    group = center_ranks(2)
    assert [group.rank(0, 2 * k) for k in range(5)] == [1, 3, 2, 0, 0]
    assert group.is_free()


@pytest.mark.parametrize('n', [1, 2, 3, 4])
def test_presented_ranks_match_ballot_numbers(n):
    for k in range(2 * n + 1):
        piece = center_presented(n, k)
        assert piece.free_rank == expected_rank(n, k)
        assert piece.torsion == []


def test_admissibility():
    assert is_admissible(())
    assert is_admissible((2, 4))
    assert not is_admissible((1,))
    assert not is_admissible((2, 3))
    assert [a.subset for a in admissible_basis(2, 1)] == [(2,), (3,), (4,)]
    assert [a.subset for a in admissible_basis(2, 2)] == [(2, 4), (3, 4)]
    assert str(admissible_basis(2, 2)[0]) == 'X2X4'


@pytest.mark.parametrize('n', [1, 2, 3, 4])
def test_admissible_monomials_form_a_basis(n):
    for k in range(n + 1):
        piece = center_presented(n, k)
        assert len(admissible_basis(n, k)) == expected_rank(n, k)
        assert piece.admissible_is_basis()


def test_relations_vanish_and_reduce():
    relation = CenterElement(2, 1, {(1,): 1, (2,): 1, (3,): 1, (4,): 1})
    assert relation.is_zero()
    x1 = CenterElement.monomial(2, (1,))
    assert x1.reduced() == {(2,): -1, (3,): -1, (4,): -1}
    assert not x1.is_zero()
    assert (x1 * x1).is_zero()


def test_products_respect_relations():
    relation = CenterElement(2, 1, {(1,): 1, (2,): 1, (3,): 1, (4,): 1})
    for a in admissible_basis(2, 1):
        assert (relation * CenterElement.monomial(2, a.subset)).is_zero()


def test_equality_in_the_center():
    lhs = CenterElement.monomial(2, (1,))
    rhs = CenterElement(2, 1, {(2,): -1, (3,): -1, (4,): -1})
    assert lhs.equals(rhs)
    assert lhs.terms != rhs.terms


def test_invalid_piece_is_rejected():
    with pytest.raises(InvalidConfigError):
        center_presented(2, 5)
    with pytest.raises(ValueError):
        CenterElement(2, 1, {(1, 2): 1})


@pytest.mark.parametrize('n', [1, 2, 3, 4])
def test_dual_center_ranks_and_membership(n):
    for k in range(n + 1):
        lattice = dual_center(n, k)
        assert lattice.rank == expected_rank(n, k)
        for f in lattice.basis:
            assert dual_membership(f, n, k)
            coords = lattice.coordinates(f)
            assert sorted(abs(c) for c in coords) == [0] * (lattice.rank - 1) + [1]


def test_matching_functional_terms():
    f = matching_functional(PartialMatching(((1, 2), (3, 4))))
    assert f.n == 2 and f.k == 2
    assert f.terms == {(1, 3): 1, (1, 4): -1, (2, 3): -1, (2, 4): 1}
    assert dual_membership(f, 2, 2)
    assert not dual_membership(DualFunctional.variable(2, 1), 2, 1)
    assert f((3, 1)) == 1


def test_partial_matching_validation():
    with pytest.raises(InvalidConfigError):
        PartialMatching(((1, 2), (2, 3)))
    assert PartialMatching(((1, 4),)).balanced
    assert not PartialMatching(((1, 3),)).balanced


def test_balanced_matching_enumeration():
    matchings = balanced_matchings(2, 1)
    assert [m.pairs for m in matchings] == [((1, 2),), ((1, 4),), ((3, 2),), ((3, 4),)]
    assert len(balanced_matchings(3, 2)) == 3 * 3 * 2


@pytest.mark.parametrize('n', [1, 2, 3, 4])
def test_balanced_matchings_span_dual_center(n):
    for k in range(n + 1):
        assert balanced_span_check(n, k)


def test_parity_permutations():
    assert parity_permutation([2, 1], [1, 2]) == {1: 3, 2: 2, 3: 1, 4: 4}
    with pytest.raises(InvalidConfigError):
        parity_permutation([1, 1], [1, 2])
    assert len(adjacent_generators(3)) == 4


def test_symmetric_action_relabels_and_rejects_parity_mixing():
    x = CenterElement.monomial(2, (1, 4))
    moved = symmetric_action(transposition(1, 3), x)
    assert moved.terms == {(3, 4): 1}
    f = DualFunctional.variable(2, 2)
    assert symmetric_action(transposition(2, 4), f).terms == {(4,): 1}
    with pytest.raises(InvalidConfigError, match='mixes'):
        symmetric_action(transposition(1, 2), x)


def test_symmetric_action_preserves_relations():
    relation = CenterElement(3, 2, {s: 1 for s in [(1, 2), (1, 3), (1, 4), (1, 5), (1, 6)]})
    assert relation.is_zero()
    for sigma in adjacent_generators(3):
        assert symmetric_action(sigma, relation).is_zero()


def test_positive_maps_formulas():
    x = CenterElement.monomial(1, (2,))
    psi, phi = psi_phi_positive(1, x)
    assert psi.terms == {(2, 4): 1, (2, 3): -1}
    assert phi.terms == {(2, 3, 4): -1}
    psi_f, phi_f = psi_phi_positive(1, x, FLIPPED)
    assert psi_f.terms == {(2, 4): -1, (2, 3): 1}
    assert phi_f.terms == {(2, 3, 4): 1}


@pytest.mark.parametrize('n', [1, 2])
def test_positive_maps_kill_relations(n):
    for k in range(1, n + 1):
        monomials = subsets(n, k)
        for column in relation_matrix(n, k).columns():
            relation = CenterElement(n, k, {monomials[i]: v for i, v in column.items()})
            for convention in (CONJECTURED, FLIPPED):
                psi, phi = psi_phi_positive(n, relation, convention)
                assert psi.is_zero()
                assert phi.is_zero()


def test_negative_maps_formulas():
    f = matching_functional(PartialMatching(((1, 2),)), 1)
    psi, phi = psi_phi_negative(1, f)
    assert psi == matching_functional(PartialMatching(((1, 2), (4, 3))), 2)
    assert phi == f.extended(2)
    psi_f, phi_f = psi_phi_negative(1, f, FLIPPED)
    assert psi_f == psi.scaled(-1)
    assert phi_f == phi.scaled(-1)


@pytest.mark.parametrize('n', [1, 2])
def test_negative_maps_preserve_the_dual_center(n):
    for k in range(n + 1):
        for f in dual_center(n, k).basis:
            psi, phi = psi_phi_negative(n, f)
            assert dual_membership(psi, n + 1, k + 1)
            assert dual_membership(phi, n + 1, k)


def test_sign_values():
    assert sign_value(CONJECTURED) == 1
    assert sign_value(FLIPPED) == -1
    with pytest.raises(InvalidConfigError):
        sign_value('mixed')


def _partial_matchings(points, k):
    """Every set of k disjoint unordered pairs from points, each pair as (low, high)."""
    if k == 0:
        yield ()
        return
    points = tuple(points)
    for idx, first in enumerate(points):
        for second in points[idx + 1:]:
            rest = [p for p in points[idx + 1:] if p != second]
            for tail in _partial_matchings(rest, k - 1):
                yield ((first, second),) + tail


@pytest.mark.parametrize('n', [1, 2, 3, 4])
def test_every_matching_functional_lies_in_the_dual_center(n):
    for k in range(n + 1):
        count = 0
        for pairs in _partial_matchings(range(1, 2 * n + 1), k):
            assert dual_membership(matching_functional(PartialMatching(pairs), n), n, k)
            count += 1
        assert count > 0


@pytest.mark.parametrize('n', [1, 2, 3])
def test_positive_maps_commute_with_the_symmetric_action(n):
    for sigma in adjacent_generators(n):
        for k in range(n + 1):
            for subset in subsets(n, k):
                x = CenterElement.monomial(n, subset)
                moved_first = psi_phi_positive(n, symmetric_action(sigma, x))
                moved_after = [symmetric_action(sigma, y) for y in psi_phi_positive(n, x)]
                for a, b in zip(moved_first, moved_after):
                    assert a.equals(b)


@pytest.mark.parametrize('n', [1, 2, 3])
def test_negative_maps_commute_with_the_symmetric_action(n):
    for sigma in adjacent_generators(n):
        for k in range(n + 1):
            for f in dual_center(n, k).basis:
                moved_first = psi_phi_negative(n, symmetric_action(sigma, f))
                moved_after = tuple(symmetric_action(sigma, g) for g in psi_phi_negative(n, f))
                assert moved_first == moved_after


@pytest.mark.parametrize('n', [2, 3])
def test_symmetric_action_permutes_the_relation_matrix(n):
    for k in range(1, n + 1):
        matrix = relation_matrix(n, k)
        rows = subsets(n, k)
        row_index = {s: i for i, s in enumerate(rows)}
        relation_sets = [j for size in range(k) for j in combinations(range(1, 2 * n + 1), size)]
        col_index = {j: c for c, j in enumerate(relation_sets)}
        columns = matrix.columns()
        column_terms = [{rows[i]: v for i, v in col.items()} for col in columns]
        for sigma in adjacent_generators(n):
            full = {p: sigma.get(p, p) for p in range(1, 2 * n + 1)}
            row_perm = []
            for s in rows:
                (moved,) = symmetric_action(sigma, CenterElement.monomial(n, s)).terms
                row_perm.append(row_index[moved])
            col_perm = [col_index[tuple(sorted(full[p] for p in j))] for j in relation_sets]
            assert matrix.permuted(row_perm, col_perm) == matrix
            for terms in column_terms:
                moved = symmetric_action(sigma, CenterElement(n, k, terms)).terms
                assert moved in column_terms
