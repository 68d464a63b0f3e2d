import pytest

from core.errors import InvalidConfigError
from frobenius import NEGATIVE, POSITIVE, FrobBasisElt, FrobeniusAlgebra, TensorElt


@pytest.mark.parametrize('N, degrees', [(1, [0]), (2, [-1, 1]), (3, [-2, 0, 2])])
def test_basis_degrees_are_symmetric(N, degrees):
    assert [x.quantum_degree for x in FrobeniusAlgebra(N).basis()] == degrees


def test_multiplication_truncates():
    algebra = FrobeniusAlgebra(3)
    x = algebra.element(1)
    assert algebra.multiply(x, x) == algebra.element(2)
    assert algebra.multiply(x, algebra.element(2)) is None
    assert algebra.multiply(algebra.unit(), x) == x


def test_comultiplication_terms_and_degree():
    algebra = FrobeniusAlgebra(2)
    delta = algebra.comultiply(algebra.unit())
    assert dict(delta) == {
        ((NEGATIVE, 0), (NEGATIVE, 1)): 1,
        ((NEGATIVE, 1), (NEGATIVE, 0)): 1,
    }
    # Δ raises degree by N − 1
    assert delta.quantum_degree() == algebra.unit().quantum_degree + 1


@pytest.mark.parametrize('N', [2, 3, 4])
def test_counit_is_left_identity_for_comultiplication(N):
    algebra = FrobeniusAlgebra(N)
    for x in algebra.basis(POSITIVE):
        collapsed = {}
        for ((_, a), (_, b)), c in algebra.comultiply(x):
            weight = algebra.counit(FrobBasisElt(a, N, POSITIVE))
            if weight:
                collapsed[b] = collapsed.get(b, 0) + weight * c
        assert collapsed == {x.m: 1}


def test_v_index_is_an_involution():
    algebra = FrobeniusAlgebra(4)
    assert [algebra.to_v_index(m) for m in range(4)] == [3, 2, 1, 0]
    assert all(algebra.from_v_index(algebra.to_v_index(m)) == m for m in range(4))


@pytest.mark.parametrize('m, N', [(-1, 2), (2, 2), (0, 0)])
def test_invalid_exponent_is_rejected(m, N):
    with pytest.raises(InvalidConfigError):
        FrobBasisElt(m, N)


def test_tensor_element_arithmetic():
    x = TensorElt.pure(2, ((NEGATIVE, 0),))
    y = TensorElt.pure(2, ((POSITIVE, 1),), coefficient=2)
    product = x.tensor(y)
    assert dict(product) == {((NEGATIVE, 0), (POSITIVE, 1)): 2}
    assert product.quantum_degree() == 0
    assert (product + product.scaled(-1)).is_zero()
    with pytest.raises(ValueError):
        (x + y).quantum_degree()


def _product(algebra, a, b):
    """Exponent of a·b, or None when the product vanishes."""
    result = algebra.multiply(algebra.element(a), algebra.element(b))
    return None if result is None else result.m


def _coproduct(algebra, m):
    return {(a, b): c for ((_, a), (_, b)), c in algebra.comultiply(algebra.element(m))}


def _add(terms, key, c):
    terms[key] = terms.get(key, 0) + c
    if not terms[key]:
        del terms[key]


@pytest.mark.parametrize('N', [1, 2, 3, 4, 5])
def test_multiplication_is_associative_and_commutative(N):
    algebra = FrobeniusAlgebra(N)
    exponents = range(N)
    for a in exponents:
        for b in exponents:
            assert _product(algebra, a, b) == _product(algebra, b, a)
            for c in exponents:
                ab = _product(algebra, a, b)
                bc = _product(algebra, b, c)
                left = None if ab is None else _product(algebra, ab, c)
                right = None if bc is None else _product(algebra, a, bc)
                assert left == right


@pytest.mark.parametrize('N', [1, 2, 3, 4, 5])
def test_comultiplication_is_coassociative(N):
    algebra = FrobeniusAlgebra(N)
    for m in range(N):
        left, right = {}, {}
        for (a, b), c in _coproduct(algebra, m).items():
            for (a1, a2), c1 in _coproduct(algebra, a).items():
                _add(left, (a1, a2, b), c * c1)
            for (b1, b2), c2 in _coproduct(algebra, b).items():
                _add(right, (a, b1, b2), c * c2)
        assert left == right


@pytest.mark.parametrize('N', [1, 2, 3, 4, 5])
def test_frobenius_condition(N):
    algebra = FrobeniusAlgebra(N)
    for a in range(N):
        for b in range(N):
            ab = _product(algebra, a, b)
            expected = {} if ab is None else _coproduct(algebra, ab)
            from_left, from_right = {}, {}
            for (b1, b2), c in _coproduct(algebra, b).items():
                ab1 = _product(algebra, a, b1)
                if ab1 is not None:
                    _add(from_left, (ab1, b2), c)
            for (a1, a2), c in _coproduct(algebra, a).items():
                a2b = _product(algebra, a2, b)
                if a2b is not None:
                    _add(from_right, (a1, a2b), c)
            assert from_left == expected
            assert from_right == expected


@pytest.mark.parametrize('N', [1, 2, 3, 4, 5])
def test_counit_is_two_sided_identity_for_comultiplication(N):
    algebra = FrobeniusAlgebra(N)
    for m in range(N):
        left, right = {}, {}
        for (a, b), c in _coproduct(algebra, m).items():
            if algebra.counit(algebra.element(a)):
                _add(left, b, c)
            if algebra.counit(algebra.element(b)):
                _add(right, a, c)
        assert left == {m: 1}
        assert right == {m: 1}
