"""Row-strict arrays, the d statistic, and the polynomials b_{lam mu}(q).

Cells are (i, j) = (row, column), both 1-based.  Cells are ordered column
first, and inside a column the lower row comes first:
(i, j) < (i', j')  iff  j < j', or j = j' and i > i'.
"""

from functools import lru_cache
from itertools import combinations

from .errors import BoundExceeded, ConsistencyError, InvalidArgument
from .partitions import Composition, Partition, distinct_permutations
from .qpoly import QPoly

ARRAY_BOUND = 12
INFINITY = float("inf")


def cell_less(x, y):
    (i, j), (k, l) = x, y
    return j < l or (j == l and i > k)


class RowStrictArray:
    """Rows of strictly increasing positive labels; row i has shape[i] cells."""

    __slots__ = ("shape", "rows")

    def __init__(self, rows, shape=None):
        rows = tuple(tuple(int(v) for v in r) for r in rows)
        for r in rows:
            if any(a >= b for a, b in zip(r, r[1:])):
                raise InvalidArgument(f"row {r} is not strictly increasing")
            if any(v < 1 for v in r):
                raise InvalidArgument("labels must be positive")
        self.rows = rows
        self.shape = Composition(len(r) for r in rows) if shape is None else Composition(shape)
        if tuple(self.shape) != tuple(len(r) for r in rows):
            raise InvalidArgument("rows do not match the shape")

    def __call__(self, cell):
        """Label at a 1-based cell, infinity off the diagram."""
        i, j = cell
        if 1 <= i <= len(self.rows) and 1 <= j <= len(self.rows[i - 1]):
            return self.rows[i - 1][j - 1]
        return INFINITY

    def cells(self):
        return [(i + 1, j + 1) for i, r in enumerate(self.rows) for j in range(len(r))]

    def weight(self):
        counts = {}
        for r in self.rows:
            for v in r:
                counts[v] = counts.get(v, 0) + 1
        top = max(counts, default=0)
        return tuple(counts.get(v, 0) for v in range(1, top + 1))

    def __eq__(self, other):
        return isinstance(other, RowStrictArray) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "RowStrictArray(" + " / ".join(" ".join(map(str, r)) or "-" for r in self.rows) + ")"


def enumerate_row_strict_arrays(shape, weight, bound=ARRAY_BOUND):
    """All row-strict arrays of a composition shape using label k exactly weight[k-1] times."""
    shape = Composition(shape)
    weight = tuple(weight)
    if sum(shape) != sum(weight):
        return []
    if sum(shape) > bound:
        raise BoundExceeded(f"array size {sum(shape)} exceeds bound {bound}")
    out = []
    rows = [[] for _ in shape]
    caps = list(shape)

    def place(label):
        if label > len(weight):
            out.append(RowStrictArray(rows, shape))
            return
        avail = [i for i, c in enumerate(caps) if c]
        for chosen in combinations(avail, weight[label - 1]):
            for i in chosen:
                rows[i].append(label)
                caps[i] -= 1
            place(label + 1)
            for i in chosen:
                rows[i].pop()
                caps[i] += 1

    place(1)
    return out


def d_statistic(A):
    """Pairs (x, y) with y < x and A(x) < A(y) < A(x->), x-> the cell right of x."""
    cells = A.cells()
    total = 0
    for x in cells:
        ax = A(x)
        right = A((x[0], x[1] + 1))
        for y in cells:
            if cell_less(y, x) and ax < A(y) < right:
                total += 1
    return total


def _sum_over_arrays(weight, shape):
    coeffs = {}
    for A in enumerate_row_strict_arrays(shape, weight):
        k = d_statistic(A)
        coeffs[k] = coeffs.get(k, 0) + 1
    if not coeffs:
        return QPoly()
    return QPoly(coeffs.get(k, 0) for k in range(max(coeffs) + 1))


def b_polynomial(lam, mu, shape=None, check_shapes=None):
    """Sum of q^d(A) over row-strict arrays of shape `shape` (default mu) and weight lam.

    With check_shapes (default: when l(mu) <= 4 and |mu| <= 6) every distinct
    rearrangement of mu is used as a shape and the results must coincide.
    """
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        return QPoly()
    if shape is None:
        shape = Composition(mu)
    else:
        shape = Composition(shape)
        if Partition.from_parts(shape) != mu:
            raise InvalidArgument(f"shape {list(shape)} is not a rearrangement of {list(mu)}")
    result = _sum_over_arrays(lam, shape)
    if check_shapes is None:
        check_shapes = len(mu) <= 4 and mu.size <= 6
    if check_shapes:
        for alt in distinct_permutations(tuple(mu)):
            other = _sum_over_arrays(lam, Composition(alt))
            if other != result:
                raise ConsistencyError(
                    f"b_({list(lam)},{list(mu)}) depends on the shape: {alt} gives {other}, not {result}")
    return result


# composition sequences

def covered_by(alpha):
    """All beta with alpha_i - 1 <= beta_i <= alpha_i (beta nonnegative)."""
    out = [()]
    for a in alpha:
        out = [b + (v,) for b in out for v in ((a - 1, a) if a else (a,))]
    return out


def d_pair(alpha, beta):
    """|{(i, j): beta_i = alpha_i, beta_j = alpha_j - 1, (j, alpha_j) < (i, alpha_i)}|."""
    n = len(alpha)
    total = 0
    for i in range(n):
        if beta[i] != alpha[i]:
            continue
        for j in range(n):
            if beta[j] == alpha[j] - 1 and cell_less((j + 1, alpha[j]), (i + 1, alpha[i])):
                total += 1
    return total


def b_polynomial_by_sequences(lam, mu, shape=None):
    """Sum over chains 0 = a0, a1, ..., as = shape with |a_i| - |a_{i-1}| = lam_i of prod q^d(a_i, a_{i-1})."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        return QPoly()
    shape = tuple(mu) if shape is None else tuple(shape)

    @lru_cache(maxsize=None)
    def f(alpha, stage):
        if stage == 0:
            return QPoly((1,)) if not any(alpha) else QPoly()
        total = QPoly()
        need = sum(alpha) - lam[stage - 1]
        for beta in covered_by(alpha):
            if sum(beta) == need:
                total = total + f(beta, stage - 1).shift(d_pair(alpha, beta))
        return total

    return f(shape, len(lam))
