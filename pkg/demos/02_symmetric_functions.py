"""
Symmetric functions from Hall algebras
======================================

Products of the generators u_(1^r) expand with 0/1-matrix counts at
t = 1 and with flag counts in general.  Inverting those expansions
sends each u_lam to a symmetric function.
"""

from hallforge.f1 import count_zero_one_matrices, elementary_product_expansion
from hallforge.partitions import partitions_of
from hallforge.symfunc import elementary_to_monomial, hall_littlewood_image, monomial_product, phi_image

# m_(1) * m_(1) = 2 m_(1,1) + m_(2)
print(monomial_product((1,), (1,)).format())

# e_lam in the monomial basis
for lam in partitions_of(3):
    print(f"e{list(lam)} =", elementary_to_monomial(lam).format())

# the same numbers as 0/1 matrices with prescribed column and row sums
print("\nmatrix counts, columns (2,1):")
for mu in partitions_of(3):
    print(f"  rows {list(mu)}: {count_zero_one_matrices((2, 1), mu)}")

# and as products of generators in the pointed-forest Hall algebra
print("u_(1,1) u_(1) =", elementary_product_expansion((2, 1)).format())

# inverting gives back the monomial functions
for lam in partitions_of(4):
    assert phi_image(lam).terms == {lam: 1}
print("\nphi(u_lam) = m_lam for |lam| = 4")

# over F_q[t] the images carry polynomial coefficients
for lam in partitions_of(3):
    print(f"psi(u{list(lam)}) =", hall_littlewood_image(lam).format())
