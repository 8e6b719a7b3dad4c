"""
A statistic on row-strict arrays
================================

b_{lam mu}(q) sums q^d(A) over row-strict arrays A of shape mu and weight
lam.  We compare it with flag counts in modules of type mu.
"""

from hallforge.fq_linear import flag_count_direct
from hallforge.partitions import ones, partitions_of
from hallforge.zelevinsky import b_polynomial, b_polynomial_by_sequences, d_statistic, enumerate_row_strict_arrays

# all arrays of shape (2,1) with weight (1,1,1)
for A in enumerate_row_strict_arrays((2, 1), (1, 1, 1)):
    print(A, "d =", d_statistic(A))

print("\nb polynomials for |lam| = 3:")
parts = partitions_of(3)
for lam in parts:
    row = [b_polynomial(lam, mu).format("q") for mu in parts]
    print(f"  {list(lam)!s:10}", " | ".join(f"{x:>12}" for x in row))

# the same polynomial from chains of compositions
print("\nchains agree:", all(b_polynomial(l, m) == b_polynomial_by_sequences(l, m)
                              for l in partitions_of(4) for m in partitions_of(4)))

# and the values count flags whose quotients are killed by t
lam, mu = (2, 1), (2, 1)
for q in (2, 3, 4):
    flags = flag_count_direct(q, mu, [ones(r) for r in lam])
    print(f"q={q}: polynomial {b_polynomial(lam, mu)(q)}, flags {flags}")
