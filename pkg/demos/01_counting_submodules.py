"""
Counting submodules of finite F_q[t]-modules
=============================================

A module of type lam is a direct sum of Jordan blocks with sizes lam.
We count its submodules of a given type and quotient type over several
fields, then recover the counts as one integer polynomial in q.
"""

from hallforge.fq_linear import (enumerate_submodules, hall_constant_direct, hall_polynomial, module_of_type,
                                 type_of)
from hallforge.f1 import f1t_hall_constant
from hallforge.partitions import partitions_of

# the module of type (2, 1) over F_2 has 8 elements
M = module_of_type(2, (2, 1))
print("elements:", M.size)

# every submodule, grouped by (sub type, quotient type)
census = {}
for S in enumerate_submodules(M):
    key = (tuple(type_of(S)), tuple(type_of(S.quotient())))
    census[key] = census.get(key, 0) + 1
for (sub, quot), count in sorted(census.items()):
    print(f"  sub {sub!s:8} quotient {quot!s:8} -> {count}")

# one structure constant, several fields
for q in (2, 3, 4, 5, 7):
    print(f"q={q}: g^(1,1)_(1),(1) = {hall_constant_direct(q, (1, 1), (1,), (1,))}")

# the values above are q + 1; interpolation finds that polynomial
poly, samples = hall_polynomial((1, 1), (1,), (1,), with_samples=True)
print("interpolated from", samples, "->", poly.format("t"))

# a larger table: all constants with |lam| = 4
print("\nHall polynomials with |lam| = 4, mu = (1,1), nu = (1,1):")
for lam in partitions_of(4):
    print(f"  {list(lam)!s:14} {hall_polynomial(lam, (1, 1), (1, 1)).format('t')}")

# setting t = 1 gives the count of invariant subsets of a pointed forest
print("\nt = 1 against pointed forests:")
for lam in partitions_of(4):
    print(f"  {list(lam)!s:14} {hall_polynomial(lam, (2,), (1, 1))(1)} vs {f1t_hall_constant(lam, (2,), (1, 1))}")
