from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hallforge.errors import BoundExceeded, InterpolationError, InvalidArgument
from hallforge.qpoly import (ONE, Q, ZERO, QPoly, QRational, interpolate_integer_poly, inversion_partition_function,
                             lattice_area_partition_function, lattice_path_area, q_binomial, q_factorial, q_int)

polys = st.lists(st.integers(-20, 20), max_size=6).map(QPoly)


def P(*c):
    return QPoly(c)


def test_q_int_examples():
    assert q_int(1) == P(1)
    assert q_int(3) == P(1, 1, 1)
    assert q_int(0) == ZERO


def test_q_factorial_examples():
    assert q_factorial(0) == ONE
    assert q_factorial(2) == P(1, 1)
    assert q_factorial(3) == P(1, 2, 2, 1)


def test_q_binomial_examples():
    assert q_binomial(2, 1) == P(1, 1)
    assert q_binomial(4, 2) == P(1, 1, 2, 1, 1)
    for n in range(6):
        assert q_binomial(n, 0) == ONE
    with pytest.raises(InvalidArgument):
        q_binomial(2, 3)


def test_inversion_examples():
    assert inversion_partition_function(0) == ONE
    assert inversion_partition_function(2) == P(1, 1)
    assert inversion_partition_function(3) == P(1, 2, 2, 1)
    with pytest.raises(BoundExceeded):
        inversion_partition_function(12)


def test_lattice_examples():
    assert lattice_area_partition_function(0, 4) == ONE
    assert lattice_area_partition_function(1, 1) == P(1, 1)
    assert lattice_area_partition_function(2, 2) == P(1, 1, 2, 1, 1)
    # all north steps first sweeps the whole rectangle
    assert lattice_path_area({1, 2}, 2, 3) == 6
    assert lattice_path_area({4, 5}, 2, 3) == 0


def test_interpolation_examples():
    assert interpolate_integer_poly([(2, 3), (3, 4), (5, 6)], 1) == P(1, 1)
    assert interpolate_integer_poly([(2, 3), (3, 4), (4, 5)], 1) == P(1, 1)
    assert interpolate_integer_poly([(2, 1), (3, 1)], 0) == ONE
    assert interpolate_integer_poly([(2, 0)], -1) == ZERO


def test_interpolation_detects_bad_samples():
    with pytest.raises(InterpolationError):
        interpolate_integer_poly([(2, 3), (3, 4), (5, 7)], 1)
    with pytest.raises(InterpolationError):
        interpolate_integer_poly([(2, 1), (4, 2)], 1)  # slope 1/2
    with pytest.raises(InterpolationError):
        interpolate_integer_poly([(2, 1)], 3)
    with pytest.raises(InvalidArgument):
        interpolate_integer_poly([(2, 1), (2, 1)], 0)


def test_format_and_json():
    assert P(1, 1).format("t") == "t + 1"
    assert P(1, 1, 1).format() == "q^2 + q + 1"
    assert P(1, -1).format() == "-q + 1"
    assert P(0, 2).format() == "2*q"
    assert ZERO.format() == "0"
    assert QPoly.from_json([1, 0, 3]) == P(1, 0, 3)
    with pytest.raises(InvalidArgument):
        QPoly.from_json([1, 0])
    with pytest.raises(InvalidArgument):
        QPoly.from_json([1.5])


def test_exact_division():
    assert (q_int(6) // q_int(2)) == P(1, 0, 1, 0, 1)
    with pytest.raises(ArithmeticError):
        q_int(3).exact_div(q_int(2))
    with pytest.raises(ZeroDivisionError):
        ONE.exact_div(ZERO)


def test_qrational_normal_form():
    r = QRational(P(2, 2), P(0, 4))
    assert r == QRational(P(1, 1), P(0, 2))
    assert QRational(P(-1), P(-1)) == QRational(ONE)
    assert QRational.q_power(-2)(2) == Fraction(1, 4)
    assert (QRational(ONE, Q) * Q).is_polynomial()
    assert QRational.from_json(r.to_json()) == r


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO


@given(polys, polys.filter(bool))
def test_division_round_trip(a, b):
    assert (a * b).exact_div(b) == a


@given(polys, st.integers(-5, 5), st.integers(-5, 5))
def test_evaluation_is_a_homomorphism(a, x, y):
    b = P(y, 1)
    assert (a * b)(x) == a(x) * b(x)
    assert (a + b)(x) == a(x) + b(x)


@given(st.integers(1, 9), st.data())
def test_q_pascal_and_specialization(n, data):
    m = data.draw(st.integers(1, n - 1)) if n > 1 else 0
    if 0 < m < n:
        assert q_binomial(n, m) == q_binomial(n - 1, m - 1) + q_binomial(n - 1, m).shift(m)
    assert q_binomial(n, m)(1) == comb(n, m)
    # palindromic of degree m(n-m)
    c = q_binomial(n, m).coeffs
    assert c == c[::-1] and len(c) - 1 == m * (n - m)


@given(st.integers(0, 6))
def test_factorial_at_one(n):
    assert q_factorial(n)(1) == factorial(n)


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=5))
def test_interpolation_recovers_polynomials(coeffs):
    p = QPoly(coeffs)
    pts = [2, 3, 4, 5, 7, 8, 9]
    deg = len(coeffs) - 1
    samples = [(x, p(x)) for x in pts[:deg + 2]]
    assert interpolate_integer_poly(samples, deg) == p
