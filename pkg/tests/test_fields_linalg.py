import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hallforge import linalg as la
from hallforge.errors import BoundExceeded, InvalidArgument
from hallforge.fields import field, is_prime_power, prime_power, prime_powers


def test_prime_powers():
    assert prime_powers() == [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]
    assert prime_power(8) == (2, 3)
    assert prime_power(9) == (3, 2)
    assert not is_prime_power(6)
    assert not is_prime_power(1)
    with pytest.raises(ValueError):
        prime_power(12)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 11, 13, 16])
def test_field_axioms(q):
    assert field(q).check_tables()


def test_field_bound():
    with pytest.raises(BoundExceeded):
        field(17)


def _matrix(q, rows, cols):
    return st.lists(st.integers(0, q - 1), min_size=rows * cols, max_size=rows * cols).map(
        lambda v: np.array(v, dtype=np.int64).reshape(rows, cols))


@settings(max_examples=60)
@given(st.sampled_from([2, 3, 4, 9]), st.integers(1, 4), st.integers(1, 4), st.data())
def test_rank_agrees_with_rref_and_nullspace(q, r, c, data):
    F = field(q)
    a = data.draw(_matrix(q, r, c))
    R, piv = la.rref(F, a)
    assert la.rank(F, a) == len(piv) == int(la.batch_rank(F, a[None])[0])
    ker = la.nullspace(F, a.T)
    assert len(ker) == r - len(piv)
    if len(ker):
        assert not la.fmatmul(F, ker, a).any()


@settings(max_examples=60)
@given(st.sampled_from([2, 3, 4]), st.integers(1, 3), st.data())
def test_affine_solution_sets_are_exact(q, n, data):
    F = field(q)
    a = data.draw(_matrix(q, n, n))
    x = data.draw(_matrix(q, 1, n))[0]
    b = la.fmatmul(F, a, x[:, None])[:, 0]
    sol = la.solve_affine(F, a, b)
    assert sol is not None
    pts = la.affine_points(F, *sol)
    assert len(pts) == q ** (n - la.rank(F, a))
    for pt in pts:
        assert la.fmatmul(F, a, pt[:, None])[:, 0].tolist() == b.tolist()


def test_all_matrices_count():
    assert len(la.all_matrices(2, 2, 2)) == 16
    gl = [m for m in la.all_matrices(2, 2, 2) if la.rank(field(2), m) == 2]
    assert len(gl) == 6
