from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hallforge.algebra import HallElement
from hallforge.errors import BoundExceeded, InvalidArgument
from hallforge.f1 import (F1tModule, PointedSet, all_f1t_modules, collapse, count_zero_one_matrices,
                          count_zero_one_matrices_brute, dual, elementary_product_expansion,
                          f1_hall_constant, f1_hall_constant_by_injections, f1t_enumerate_submodules,
                          f1t_flag_count, f1t_hall_constant, f1t_module_of_type, f1t_type, restrict)
from hallforge.partitions import Partition, dominance_leq, ones, partitions_of
from strategies import partitions


def test_pointed_set():
    assert PointedSet(3).elements() == [0, 1, 2, 3]
    with pytest.raises(InvalidArgument):
        PointedSet(-1)


@pytest.mark.parametrize("n, m, expected", [(1, 1, 2), (5, 0, 1), (2, 2, 6), (0, 3, 1)])
def test_vect_f1_constants(n, m, expected):
    assert f1_hall_constant(n, m) == expected


def test_vect_f1_constants_against_binomial():
    for total in range(13):
        for m in range(total + 1):
            assert f1_hall_constant(total - m, m) == comb(total, m)
    for total in range(7):
        for m in range(total + 1):
            assert f1_hall_constant_by_injections(total - m, m) == comb(total, m)
    with pytest.raises(BoundExceeded):
        f1_hall_constant(15, 6)


def test_module_validation():
    for bad in ([1], [2, 1], [0, 3], [3, 3, 0], [2, 3, 1]):
        with pytest.raises(InvalidArgument):
            F1tModule(bad)


def test_types():
    assert f1t_type(F1tModule([])) == Partition()
    assert f1t_type(F1tModule([0, 0, 0, 0])) == ones(4)
    # chains 6->1->4->*, 3->8->*, 7->2->*, 5->*
    drawn = F1tModule([4, 0, 8, 0, 0, 1, 2, 0])
    assert f1t_type(drawn) == Partition((3, 2, 2, 1))
    assert f1t_type(f1t_module_of_type((3, 2, 2, 1))) == Partition((3, 2, 2, 1))
    assert f1t_module_of_type(()) == F1tModule([])
    assert f1t_module_of_type((2,)) == F1tModule([2, 0])


def test_json_round_trip():
    M = f1t_module_of_type((3, 1))
    assert M.to_json() == [2, 3, 0, 0]
    assert F1tModule.from_json(M.to_json()) == M


@pytest.mark.parametrize("lam, sub, quot, expected", [
    ((1, 1), (1,), (1,), 2),
    ((2,), (1,), (1,), 1),
    ((2, 1), (2, 1), (), 1),
    ((3, 2), (), (3, 2), 1),
])
def test_enumerate_submodules_examples(lam, sub, quot, expected):
    assert len(f1t_enumerate_submodules(f1t_module_of_type(lam), sub, quot)) == expected


def test_exact_sequence_pieces():
    M = f1t_module_of_type((2, 1))
    # {2, 3}: the bottom of the long chain and the short chain
    S = frozenset({2, 3})
    assert f1t_type(restrict(M, S)) == Partition((1, 1))
    assert f1t_type(collapse(M, S)) == Partition((1,))


@pytest.mark.parametrize("lam, mu, nu, expected", [
    ((1, 1), (1,), (1,), 2),
    ((2,), (1,), (1,), 1),
    ((1, 1, 1), (1, 1), (1,), 3),
    ((3,), (1,), (1,), 0),
])
def test_f1t_hall_constants(lam, mu, nu, expected):
    assert f1t_hall_constant(lam, mu, nu) == expected


@pytest.mark.parametrize("cols, rows, expected", [((1,), (1,), 1), ((2, 1), (1, 1, 1), 3), ((2, 1), (2, 1), 1),
                                                  ((2,), (1,), 0)])
def test_zero_one_matrices(cols, rows, expected):
    assert count_zero_one_matrices(cols, rows) == expected


def test_elementary_expansion_examples():
    one, two = Partition((1,)), Partition((2,))
    assert elementary_product_expansion((1,)) == HallElement.basis(one)
    assert elementary_product_expansion((1, 1)) == HallElement({ones(2): 2, two: 1})
    assert elementary_product_expansion((2, 1)) == HallElement({Partition((2, 1)): 1, ones(3): 3})


def test_commutativity_exhaustive():
    for n in range(7):
        for k in range(n + 1):
            for lam in partitions_of(n):
                for mu in partitions_of(n - k):
                    for nu in partitions_of(k):
                        assert f1t_hall_constant(lam, mu, nu) == f1t_hall_constant(lam, nu, mu)


def test_transposed_matrix_counts_are_unitriangular():
    for n in range(9):
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                a = count_zero_one_matrices(lam.conjugate(), mu)
                if lam == mu:
                    assert a == 1
                elif not dominance_leq(mu, lam):
                    assert a == 0


def test_expansion_agrees_with_matrices():
    for n in range(7):
        for lam in partitions_of(n):
            # raises if the two computations disagree
            expansion = elementary_product_expansion(lam)
            for mu in partitions_of(n):
                assert expansion.coeff(mu) == count_zero_one_matrices(lam, mu)


def test_dual_preserves_type():
    for n in range(9):
        for M in all_f1t_modules(n):
            assert f1t_type(dual(M)) == f1t_type(M)


def test_all_modules_count():
    # sets of nonempty linear orders on n labelled points
    assert [len(all_f1t_modules(n)) for n in range(5)] == [1, 1, 3, 13, 73]


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(0, 4), min_size=1, max_size=4), st.lists(st.integers(0, 4), min_size=1, max_size=4))
def test_matrix_count_matches_brute_force(cols, rows):
    cols = Partition.from_parts(cols)
    rows = Partition.from_parts(rows)
    if len(cols) * len(rows) > 16:
        return
    assert count_zero_one_matrices(cols, rows) == count_zero_one_matrices_brute(cols, rows)


@settings(max_examples=30, deadline=None)
@given(partitions(max_size=6))
def test_submodule_census_splits_by_types(lam):
    M = f1t_module_of_type(lam)
    total = len(f1t_enumerate_submodules(M))
    by_types = sum(f1t_hall_constant(lam, mu, nu) for k in range(lam.size + 1)
                   for mu in partitions_of(lam.size - k) for nu in partitions_of(k))
    assert total == by_types


@settings(max_examples=20, deadline=None)
@given(partitions(max_size=5))
def test_two_step_flags_are_hall_constants(lam):
    for k in range(lam.size + 1):
        for mu in partitions_of(lam.size - k):
            for nu in partitions_of(k):
                assert f1t_flag_count(lam, [mu, nu]) == f1t_hall_constant(lam, mu, nu)
