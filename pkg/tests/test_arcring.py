import itertools

import numpy as np
import pytest

from arcring import (
    ONE,
    X,
    ArcBasis,
    ArcElement,
    CrossinglessMatching,
    arc_basis,
    center_bruteforce,
    compose_circles,
    enumerate_matchings,
    hn_multiply,
    idempotent,
    identity,
    monomial_element,
    multiply_basis,
    xi_action,
)
from center import relation_matrix, subsets
from core.errors import ResourceCapError
from intlinalg import IntMatrix, rational_rank


@pytest.mark.parametrize('n, catalan', [(0, 1), (1, 1), (2, 2), (3, 5), (4, 14), (5, 42), (6, 132)])
def test_matching_counts(n, catalan):
    matchings = enumerate_matchings(n)
    assert len(matchings) == catalan
    assert list(matchings) == sorted(matchings)


def test_crossing_arcs_are_rejected():
    with pytest.raises(ValueError, match='cross'):
        CrossinglessMatching.of([(1, 3), (2, 4)])
    with pytest.raises(ValueError):
        CrossinglessMatching.of([(1, 2), (2, 3)])


def test_compose_circles():
    nested = CrossinglessMatching.of([(1, 4), (2, 3)])
    side = CrossinglessMatching.of([(1, 2), (3, 4)])
    assert compose_circles(side, side) == ((1, 2), (3, 4))
    assert compose_circles(nested, side) == ((1, 2, 3, 4),)
    assert nested.partner(2) == 3


def test_arc_basis_size_and_degrees():
    basis = arc_basis(2)
    assert len(basis) == 12
    assert sorted({d.degree for d in basis}) == [0, 1, 2, 3, 4]
    assert len(arc_basis(1)) == 2


def test_identity_is_two_sided_unit():
    one = identity(2)
    for diagram in arc_basis(2):
        x = ArcElement.basis(diagram)
        assert one * x == x
        assert x * one == x


def test_multiplication_is_associative_and_graded():
    basis = arc_basis(2)
    for x, y, z in itertools.product(basis, repeat=3):
        ex, ey, ez = ArcElement.basis(x), ArcElement.basis(y), ArcElement.basis(z)
        assert (ex * ey) * ez == ex * (ey * ez)
    for x, y in itertools.product(basis, repeat=2):
        for diagram, _ in multiply_basis(x, y):
            assert diagram.degree == x.degree + y.degree


def test_surgery_order_does_not_matter():
    for x, y in itertools.product(arc_basis(2), repeat=2):
        if x.b != y.a:
            continue
        arcs = list(x.b.arcs)
        assert multiply_basis(x, y, order=arcs) == multiply_basis(x, y, order=arcs[::-1])


def test_mismatched_blocks_multiply_to_zero():
    side = CrossinglessMatching.of([(1, 2), (3, 4)])
    nested = CrossinglessMatching.of([(1, 4), (2, 3)])
    product = hn_multiply(idempotent(side), idempotent(nested))
    assert product.is_zero()


def test_merge_of_two_marked_circles_vanishes():
    side = CrossinglessMatching.of([(1, 2), (3, 4)])
    nested = CrossinglessMatching.of([(1, 4), (2, 3)])
    x = ArcBasis(side, nested, (X,))
    y = ArcBasis(nested, side, (X,))
    assert multiply_basis(x, y).is_zero()
    one_way = multiply_basis(ArcBasis(side, nested, (ONE,)), ArcBasis(nested, side, (ONE,)))
    # the saddle splits the merged circle back: 1 ↦ 1⊗X + X⊗1
    assert sorted(d.labels for d, _ in one_way) == [(ONE, X), (X, ONE)]


def test_xi_action_matches_left_multiplication():
    for i in range(1, 5):
        central = monomial_element(2, [i])
        for diagram in arc_basis(2):
            x = ArcElement.basis(diagram)
            assert central * x == xi_action(i, x)
            assert x * central == central * x


def test_arc_endpoints_have_opposite_variables():
    side = CrossinglessMatching.of([(1, 2), (3, 4)])
    total = xi_action(1, idempotent(side)) + xi_action(2, idempotent(side))
    assert total.is_zero()
    assert xi_action(1, xi_action(2, idempotent(side))).is_zero()


@pytest.mark.parametrize('n, ranks', [(1, [1, 1]), (2, [1, 3, 2]), (3, [1, 5, 9, 5])])
def test_bruteforce_center_ranks(n, ranks):
    group, central = center_bruteforce(n)
    assert [group.rank(0, 2 * k) for k in range(n + 1)] == ranks
    assert len(central) == sum(ranks)
    for element in central:
        for diagram in arc_basis(n):
            h = ArcElement.basis(diagram)
            assert element * h == h * element


def test_block_diagonal_restriction_loses_nothing():
    restricted, _ = center_bruteforce(2)
    full, _ = center_bruteforce(2, block_diagonal=False)
    assert restricted.same_as(full)


def test_bruteforce_center_caps():
    with pytest.raises(ResourceCapError):
        center_bruteforce(4, max_n=3)
    with pytest.raises(ResourceCapError):
        center_bruteforce(2, max_dim=10)


def test_identity_is_two_sided_unit_for_three_arcs():
    one = identity(3)
    for diagram in arc_basis(3):
        x = ArcElement.basis(diagram)
        assert one * x == x
        assert x * one == x


def test_random_triples_associate_for_three_arcs():
    basis = arc_basis(3)
    starting_at = {}
    for diagram in basis:
        starting_at.setdefault(diagram.a, []).append(diagram)
    rng = np.random.default_rng(2024)
    for _ in range(10000):
        x = basis[rng.integers(len(basis))]
        after_x = starting_at[x.b]
        y = after_x[rng.integers(len(after_x))]
        after_y = starting_at[y.b]
        z = after_y[rng.integers(len(after_y))]
        ex, ey, ez = ArcElement.basis(x), ArcElement.basis(y), ArcElement.basis(z)
        assert (ex * ey) * ez == ex * (ey * ez)


@pytest.mark.parametrize('n', [1, 2, 3])
def test_point_variables_square_to_zero_and_commute(n):
    points = range(1, 2 * n + 1)
    for diagram in arc_basis(n):
        x = ArcElement.basis(diagram)
        for i in points:
            assert xi_action(i, xi_action(i, x)).is_zero()
            for j in points:
                assert xi_action(i, xi_action(j, x)) == xi_action(j, xi_action(i, x))


def _monomials(n, k):
    return {subset: monomial_element(n, subset) for subset in subsets(n, k)}


@pytest.mark.parametrize('n', [1, 2, 3])
def test_center_relations_vanish_in_the_arc_ring(n):
    for k in range(1, 2 * n + 1):
        rows = subsets(n, k)
        monomials = _monomials(n, k)
        for column in relation_matrix(n, k).columns():
            total = ArcElement(n)
            for row, coefficient in column.items():
                total = total + monomials[rows[row]].scaled(coefficient)
            assert total.is_zero()


def _coordinate_matrix(elements):
    index = {}
    columns = []
    for element in elements:
        column = {}
        for diagram, coefficient in element:
            column[index.setdefault(diagram, len(index))] = coefficient
        columns.append(column)
    return IntMatrix.from_columns(len(index), columns)


@pytest.mark.parametrize('n', [1, 2, 3])
def test_point_monomials_span_the_bruteforce_center(n):
    group, central = center_bruteforce(n)
    for k in range(n + 1):
        monomials = list(_monomials(n, k).values())
        in_degree = [c for c in central if c.degrees() == {2 * k}]
        assert rational_rank(_coordinate_matrix(monomials)) == group.rank(0, 2 * k)
        assert rational_rank(_coordinate_matrix(monomials + in_degree)) == group.rank(0, 2 * k)
