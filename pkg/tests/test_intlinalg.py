import numpy as np
import pytest
import sympy

from core.errors import ResourceCapError
from intlinalg import (
    CokernelMap,
    GradedGroup,
    IntMatrix,
    cokernel,
    kernel_basis,
    rational_rank,
    smith_normal_form,
    solve_in_lattice,
)


@pytest.mark.parametrize(
    'dense, diagonal',
    [
        ([[2, 0], [0, 3]], (1, 6)),
        ([[2, 4], [6, 8]], (2, 4)),
        ([[0, 0], [0, 0]], ()),
        ([[1, 2, 3], [4, 5, 6], [7, 8, 9]], (1, 3)),
        ([[6]], (6,)),
        ([[-4, 0], [0, 6]], (2, 12)),
    ],
)
def test_smith_diagonal(dense, diagonal):
    assert smith_normal_form(IntMatrix.from_dense(dense)).diagonal == diagonal


@pytest.mark.parametrize('seed', [0, 1, 2, 3, 4])
def test_smith_transforms_on_random_matrices(seed):
    rng = np.random.default_rng(seed)
    rows, cols = rng.integers(1, 6, size=2)
    dense = rng.integers(-4, 5, size=(rows, cols)).tolist()
    matrix = IntMatrix.from_dense(dense)
    snf = smith_normal_form(matrix)

    assert snf.U @ matrix @ snf.V == snf.padded()
    for a, b in zip(snf.diagonal, snf.diagonal[1:]):
        assert b % a == 0
    assert all(d > 0 for d in snf.diagonal)
    assert snf.rank == rational_rank(matrix)


def test_smith_respects_nonzero_cap():
    with pytest.raises(ResourceCapError) as info:
        smith_normal_form(IntMatrix.from_dense([[1, 1], [1, 1]]), max_nonzeros=3)
    assert info.value.exit_code == 3
    assert info.value.details['nonzeros'] == 4


def test_cokernel_structure():
    assert cokernel(IntMatrix.from_dense([[2, 0], [0, 3]])) == (0, [6])
    assert cokernel(IntMatrix.from_dense([[2], [0]])) == (1, [2])
    assert cokernel(IntMatrix(3, 0)) == (3, [])


def _sparse_random(rng, rows, cols, density=0.3):
    dense = rng.integers(-5, 6, size=(rows, cols))
    mask = rng.random(size=(rows, cols)) < density
    return IntMatrix.from_dense((dense * mask).tolist())


def _random_shape(seed):
    rng = np.random.default_rng(seed)
    rows, cols = rng.integers(1, 31, size=2)
    return int(rows), int(cols)


SNF_SHAPES = [(30, 30), (30, 12), (7, 30), (1, 30), (30, 1)] + [_random_shape(s) for s in range(10, 20)]


@pytest.mark.parametrize('seed, shape', list(enumerate(SNF_SHAPES)))
def test_smith_on_sparse_matrices_up_to_30x30(seed, shape):
    rng = np.random.default_rng(100 + seed)
    matrix = _sparse_random(rng, *shape)
    snf = smith_normal_form(matrix)

    assert snf.U @ matrix @ snf.V == snf.padded()
    assert all(d > 0 for d in snf.diagonal)
    for a, b in zip(snf.diagonal, snf.diagonal[1:]):
        assert b % a == 0
    assert sympy.Matrix(snf.U.to_dense()).det() in (1, -1)
    assert sympy.Matrix(snf.V.to_dense()).det() in (1, -1)


@pytest.mark.parametrize('seed', [20, 21, 22, 23])
def test_smith_diagonal_is_invariant_under_permutations(seed):
    rng = np.random.default_rng(seed)
    rows, cols = (int(x) for x in rng.integers(5, 31, size=2))
    matrix = _sparse_random(rng, rows, cols)
    row_perm = [int(i) for i in rng.permutation(rows)]
    col_perm = [int(j) for j in rng.permutation(cols)]

    shuffled = matrix.permuted(row_perm, col_perm)
    assert smith_normal_form(shuffled).diagonal == smith_normal_form(matrix).diagonal


@pytest.mark.parametrize('seed', [30, 31, 32, 33, 34])
def test_cokernel_free_rank_complements_rank(seed):
    rng = np.random.default_rng(seed)
    rows, cols = (int(x) for x in rng.integers(1, 31, size=2))
    matrix = _sparse_random(rng, rows, cols)
    free_rank, torsion = cokernel(matrix)

    assert free_rank + rational_rank(matrix) == rows
    assert all(t > 1 for t in torsion)


def test_transforms_can_be_skipped():
    snf = smith_normal_form(IntMatrix.from_dense([[2, 4], [6, 8]]), transforms=False)
    assert snf.diagonal == (2, 4)
    assert snf.U is None and snf.V is None


def test_cokernel_map_coordinates():
    # Z^2 / <(1, -1)> is free of rank one; both generators map to the same class
    quotient = CokernelMap(IntMatrix.from_dense([[1], [-1]]))
    assert quotient.free_rank == 1
    first = quotient.free_coordinates({0: 1})
    assert first == quotient.free_coordinates({1: 1})
    assert abs(first[0]) == 1
    assert quotient.is_zero({0: 1, 1: -1})
    assert not quotient.is_zero({0: 1})
    lift = quotient.free_lifts()[0]
    assert abs(quotient.free_coordinates(lift)[0]) == 1


def test_cokernel_map_torsion_coordinates():
    quotient = CokernelMap(IntMatrix.from_dense([[2]]))
    assert quotient.torsion == [2]
    assert quotient.torsion_coordinates({0: 3}) == (1,)
    assert quotient.is_zero({0: 4})


@pytest.mark.parametrize('seed', [5, 6, 7])
def test_kernel_basis_spans_kernel(seed):
    rng = np.random.default_rng(seed)
    dense = rng.integers(-3, 4, size=(3, 6)).tolist()
    matrix = IntMatrix.from_dense(dense)
    basis = kernel_basis(matrix)

    assert len(basis) == matrix.cols - rational_rank(matrix)
    for vector in basis:
        assert matrix.apply(vector) == {}


def test_solve_in_lattice():
    basis = IntMatrix.from_dense([[2, 0], [0, 3]])
    assert solve_in_lattice(basis, {0: 4, 1: -3}) == [2, -1]
    assert solve_in_lattice(basis, {0: 1}) is None


def test_graded_group_order_and_torsion():
    group = GradedGroup()
    group.set_piece(0, -2, 1)
    group.set_piece(0, 0, 2, [-4, 1, 2])
    group.set_piece(1, 4, 0)

    assert [key for key, _ in group.items()] == [(0, 0), (0, -2), (1, 4)]
    assert group.torsion(0, 0) == (2, 4)
    assert group.rank(5, 5) == 0
    assert group.nonzero() == {(0, 0): (2, (2, 4)), (0, -2): (1, ())}
    assert not group.is_free()
    assert group.total_rank() == 3


def test_graded_group_tensor_convolves_ranks():
    left = GradedGroup()
    left.set_piece(0, 0, 1)
    left.set_piece(0, -2, 1)
    right = GradedGroup()
    right.set_piece(0, 1, 1)
    right.set_piece(0, -1, 1)

    product = left.tensor(right)
    assert product.rank(0, 1) == 1
    assert product.rank(0, -1) == 2
    assert product.rank(0, -3) == 1
    assert product.total_rank() == 4
