import json

import pytest
from hypothesis import given, settings

from hallforge.errors import BoundExceeded, InvalidArgument
from hallforge.partitions import Partition, ones, partitions_of
from hallforge.qpoly import QPoly
from hallforge.symfunc import (SymFunc, a_tilde_matrix, determinant, elementary_to_monomial,
                               elementary_to_monomial_by_products, hall_littlewood_image, monomial_product,
                               multiply_m, phi_image, unimodular_inverse)
from strategies import partitions


def m(*pairs):
    return SymFunc("m", {Partition(k): v for k, v in pairs})


def test_monomial_product_examples():
    assert monomial_product(Partition(), Partition((2, 1))) == SymFunc.m((2, 1))
    assert monomial_product(Partition((1,)), Partition((1,))) == m(((1, 1), 2), ((2,), 1))
    assert monomial_product(Partition((1, 1)), Partition((1,))) == m(((1, 1, 1), 3), ((2, 1), 1))
    assert monomial_product(Partition((2,)), Partition((1,))) == m(((3,), 1), ((2, 1), 1))
    with pytest.raises(BoundExceeded):
        monomial_product(Partition((7,)), Partition((6,)))


def test_elementary_examples():
    for r in range(6):
        assert elementary_to_monomial(Partition((r,)) if r else Partition()) == SymFunc.m(ones(r))
    assert elementary_to_monomial((2, 1)) == m(((2, 1), 1), ((1, 1, 1), 3))
    assert elementary_to_monomial(()) == SymFunc.m(())


def test_phi_examples():
    for r in range(5):
        assert phi_image(ones(r)) == SymFunc.m(ones(r))
    assert phi_image((2, 1)) == SymFunc.m((2, 1))
    assert phi_image(()) == SymFunc.m(())


def test_phi_is_monomial_through_degree_six():
    for n in range(7):
        for lam in partitions_of(n):
            assert phi_image(lam) == SymFunc.m(lam)


def test_hall_littlewood_values():
    one = QPoly((1,))
    for r in range(5):
        assert hall_littlewood_image(ones(r)) == SymFunc.m(ones(r), one)
    assert hall_littlewood_image((2,)) == m(((2,), one), ((1, 1), QPoly((1, -1))))
    # worked out by hand from u_1 u_11 = u_21 + (t^2+t+1) u_111
    assert hall_littlewood_image((2, 1)) == m(((2, 1), one), ((1, 1, 1), QPoly((2, -1, -1))))
    assert hall_littlewood_image((3,)) == m(((3,), one), ((2, 1), QPoly((2, -2))), ((1, 1, 1), QPoly((3, -5, 1, 1))))


def test_hall_littlewood_specializes_to_monomials():
    for n in range(6):
        for lam in partitions_of(n):
            assert hall_littlewood_image(lam).specialize(1) == SymFunc.m(lam)


def test_hall_littlewood_bound():
    with pytest.raises(BoundExceeded):
        hall_littlewood_image((4, 3))


def test_transition_matrices_are_unimodular():
    for n in range(9):
        parts, a = a_tilde_matrix(n)
        assert determinant(a) in (1, -1)
        for i in range(len(parts)):
            assert a[i][i] == 1
            assert all(a[i][j] == 0 for j in range(i))


def test_unimodular_inverse():
    a = [[1, 2], [0, 1]]
    assert unimodular_inverse(a) == [[1, -2], [0, 1]]
    with pytest.raises(ArithmeticError):
        unimodular_inverse([[2, 0], [0, 1]])


def test_symfunc_arithmetic_and_json():
    f = m(((2, 1), 3), ((1, 1, 1), 0))
    assert f.terms == {Partition((2, 1)): 3}
    assert (f + f.scale(-1)).terms == {}
    with pytest.raises(InvalidArgument):
        f + SymFunc.e((1,))
    with pytest.raises(InvalidArgument):
        SymFunc("s", {})
    data = f.to_json()
    assert data == {"basis": "m", "terms": [{"part": [2, 1], "coeff": [3]}]}
    assert json.loads(json.dumps(data)) == data
    back = SymFunc.from_json(data)
    assert back.specialize(0) == f
    assert SymFunc("m").format() == "0"


@settings(max_examples=30, deadline=None)
@given(partitions(max_size=5), partitions(max_size=5))
def test_products_are_homogeneous_and_commutative(lam, mu):
    p = monomial_product(lam, mu)
    assert p.degrees() in ([], [lam.size + mu.size])
    assert p == monomial_product(mu, lam)
    assert p.coeff(Partition.from_parts(tuple(lam) + tuple(mu))) >= 1


@settings(max_examples=20, deadline=None)
@given(partitions(max_size=3), partitions(max_size=3), partitions(max_size=3))
def test_monomial_product_is_associative(a, b, c):
    left = multiply_m(multiply_m(SymFunc.m(a), SymFunc.m(b)), SymFunc.m(c))
    right = multiply_m(SymFunc.m(a), multiply_m(SymFunc.m(b), SymFunc.m(c)))
    assert left == right


@settings(max_examples=30, deadline=None)
@given(partitions(max_size=8))
def test_elementary_expansion_two_ways(lam):
    assert elementary_to_monomial(lam, cross_check=False) == elementary_to_monomial_by_products(lam)
