"""
Groupoids, spans and flags
==========================

Cardinalities of finite groupoids, 2-pullbacks, and the span of flag
groupoids whose linear map is the Hall product of vector spaces.
"""

from hallforge.flags import truncated_flag_groupoid, truncated_hall_span, two_segal_cardinality_check
from hallforge.groupoids import (action_groupoid, classifying_groupoid, cyclic_group, object_inclusion,
                                 span_to_linear_map, two_pullback)

# C_2 swapping 1<->4 and 2<->3: two free orbits
K = [1, 2, 3, 4]
swap = {1: 4, 2: 3, 3: 2, 4: 1}
A = action_groupoid(K, [{k: k for k in K}, swap])
print(A, "cardinality", A.cardinality())

# a fixed point contributes 1/2
B = action_groupoid([1, 2, 3], [{1: 1, 2: 2, 3: 3}, {1: 3, 2: 2, 3: 1}])
print(B, "cardinality", B.cardinality(), "profile", B.profile())

# the point over BC_3, pulled back against itself
star = object_inclusion(classifying_groupoid(cyclic_group(3)), "*")
L, _, _ = two_pullback(star, star)
print("loops:", L, "cardinality", L.cardinality())

# flags of F_2-vector spaces of dimension <= 2
for n in range(3):
    S = truncated_flag_groupoid(2, n, 2)
    print(f"S_{n}: {len(S)} flags, {len(S.class_representatives())} classes, cardinality {S.cardinality()}")

# the span S_1 x S_1 <- S_2 -> S_1 as a matrix
M = span_to_linear_map(truncated_hall_span(2, 2))
for row, entries in zip(M.rows, M.entries):
    nonzero = {f"{c[0][0]}+{c[1][0]}": str(v) for c, v in zip(M.cols, entries) if v}
    print(f"  dim {row[0]}: {nonzero}")

ok, report = two_segal_cardinality_check(2, 2)
print("\nsquares:", [(s["square"], not s["failures"]) for s in report["squares"]], "ok =", ok)
