"""
Coproduct of vector spaces and the twisted product
==================================================

The coproduct weights each (quotient, sub) pair by the cardinality of
its extension groupoid.  Multiplying coproducts needs a correction factor
before it matches the coproduct of a product.
"""

from hallforge.algebra import HallElement
from hallforge.hall import (VectFqBackend, coproduct_prime, green_compatibility_check, hall_multiply,
                            twist_factor)

v = VectFqBackend(2)
u = HallElement.basis

for n in range(4):
    print(f"D(1_{n}) =", coproduct_prime(v, u(n)).format())

print("\n1_1 * 1_1 =", hall_multiply(v, u(1), u(1)).format())
print("twist for (1, 1):", twist_factor(v, 1, 1))

ok, report = green_compatibility_check(v, 1, 1)
print("\nleft: ", report["lhs"])
print("right:", report["rhs"])
print("equal:", ok)

# every pair of small dimensions over F_2 and F_3
for q in (2, 3):
    w = VectFqBackend(q)
    results = [green_compatibility_check(w, a, b)[0] for a in range(4) for b in range(4)]
    print(f"q={q}: {sum(results)}/{len(results)} pairs agree")
