"""Pointed finite sets, and pointed sets with a nilpotent endomorphism.

An F1tModule on n elements is an action array `action` of length n: element
i (1-based) goes to action[i-1], with 0 standing for the base point *.  The
functional graph is a disjoint union of chains running into *.
"""

from functools import lru_cache
from itertools import combinations, permutations
from math import comb, factorial

from .algebra import HallElement
from .errors import BoundExceeded, ConsistencyError, InvalidArgument
from .partitions import Partition, ones

F1_BOUND = 20
MATRIX_BOUND = 12


class PointedSet:
    """{*, 1, ..., n}."""

    __slots__ = ("size",)

    def __init__(self, size):
        if size < 0:
            raise InvalidArgument("pointed set size must be nonnegative")
        self.size = size

    def elements(self):
        return [0] + list(range(1, self.size + 1))

    def __eq__(self, other):
        return isinstance(other, PointedSet) and other.size == self.size

    def __hash__(self):
        return hash(("PointedSet", self.size))

    def __repr__(self):
        return f"PointedSet({self.size})"


def pointed_injections(m, n):
    """Base-point preserving maps {*,1..m} -> {*,1..n} injective away from *, hitting * only at *."""
    return list(permutations(range(1, n + 1), m))


def f1_hall_constant(n, m, bound=F1_BOUND):
    """Subobjects of {*,1..n+m} with m points and quotient of n points, by enumeration."""
    if n < 0 or m < 0:
        raise InvalidArgument("sizes must be nonnegative")
    if n + m > bound:
        raise BoundExceeded(f"n+m = {n + m} exceeds bound {bound}")
    count = sum(1 for s in combinations(range(1, n + m + 1), m) if n + m - len(s) == n)
    if count != comb(n + m, m):
        raise ConsistencyError("pointed subset count disagrees with the binomial")
    return count


def f1_hall_constant_by_injections(n, m, bound=8):
    """Injections {*,1..m} -> {*,1..n+m} divided by |Aut| = m!."""
    if n + m > bound:
        raise BoundExceeded("injection enumeration is factorial; keep n+m small")
    total = len(pointed_injections(m, n + m))
    assert total % factorial(m) == 0
    return total // factorial(m)


class F1tModule:
    def __init__(self, action):
        action = tuple(int(a) for a in action)
        n = len(action)
        if any(a < 0 or a > n for a in action):
            raise InvalidArgument(f"action values must lie in 0..{n}")
        if any(a == i + 1 for i, a in enumerate(action)):
            raise InvalidArgument("an element may not map to itself")
        hit = [a for a in action if a]
        if len(hit) != len(set(hit)):
            raise InvalidArgument("action must be injective away from the base point")
        for i in range(n):
            x, steps = i + 1, 0
            while x:
                x = action[x - 1]
                steps += 1
                if steps > n:
                    raise InvalidArgument("action is not nilpotent")
        self.action = action

    @property
    def n(self):
        return len(self.action)

    @property
    def carrier(self):
        return PointedSet(self.n)

    def apply(self, x):
        return 0 if x == 0 else self.action[x - 1]

    def depth(self, x):
        """Steps needed to reach *."""
        steps = 0
        while x:
            x = self.action[x - 1]
            steps += 1
        return steps

    def to_json(self):
        return list(self.action)

    @classmethod
    def from_json(cls, data):
        return cls(data)

    def __eq__(self, other):
        return isinstance(other, F1tModule) and other.action == self.action

    def __hash__(self):
        return hash(self.action)

    def __repr__(self):
        return f"F1tModule({list(self.action)})"


def f1t_type(M):
    """Partition of chain lengths: depth of each element outside the image of T."""
    image = set(a for a in M.action if a)
    return Partition.from_parts(M.depth(x) for x in range(1, M.n + 1) if x not in image)


def f1t_module_of_type(lam, bound=F1_BOUND):
    """Chains by decreasing length, numbered chain by chain, each running down to *."""
    lam = Partition(lam)
    if lam.size > bound:
        raise BoundExceeded(f"|lambda| = {lam.size} exceeds bound {bound}")
    action, off = [], 0
    for part in lam:
        for a in range(part):
            action.append(off + a + 2 if a < part - 1 else 0)
        off += part
    return F1tModule(action)


def restrict(M, subset):
    """Submodule on an invariant subset, relabelled 1..k in increasing order."""
    elems = sorted(subset)
    index = {x: i + 1 for i, x in enumerate(elems)}
    index[0] = 0
    return F1tModule([index[M.apply(x)] for x in elems])


def collapse(M, subset):
    """Quotient M/S: S is sent to *, the remaining elements relabelled in order."""
    rest = [x for x in range(1, M.n + 1) if x not in subset]
    index = {x: i + 1 for i, x in enumerate(rest)}
    return F1tModule([index.get(M.apply(x), 0) for x in rest])


def invariant_subsets(M):
    """Every T-invariant subset, built in order of depth so T(x) is decided before x."""
    order = sorted(range(1, M.n + 1), key=lambda x: (M.depth(x), x))
    out = []

    def rec(i, chosen):
        if i == len(order):
            out.append(frozenset(chosen))
            return
        x = order[i]
        rec(i + 1, chosen)
        t = M.apply(x)
        if t == 0 or t in chosen:
            chosen.add(x)
            rec(i + 1, chosen)
            chosen.discard(x)

    rec(0, set())
    return out


def f1t_enumerate_submodules(M, sub_type=None, quot_type=None):
    sub_type = None if sub_type is None else Partition(sub_type)
    quot_type = None if quot_type is None else Partition(quot_type)
    if M.n > F1_BOUND:
        raise BoundExceeded(f"module on {M.n} points exceeds bound")
    out = []
    for s in invariant_subsets(M):
        if sub_type is not None and (len(s) != sub_type.size or f1t_type(restrict(M, s)) != sub_type):
            continue
        if quot_type is not None and (M.n - len(s) != quot_type.size or f1t_type(collapse(M, s)) != quot_type):
            continue
        out.append(s)
    out.sort(key=lambda s: (len(s), sorted(s)))
    return out


@lru_cache(maxsize=None)
def f1t_hall_constant(lam, mu, nu):
    """Invariant subsets of type nu with quotient type mu in the module of type lam."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if mu.size + nu.size != lam.size:
        return 0
    M = f1t_module_of_type(lam)
    return len(f1t_enumerate_submodules(M, nu, mu))


def f1t_flag_count(lam, quotient_types):
    """Chains of invariant subsets M = M_0 > ... > M_s = empty with prescribed quotient types."""
    types = tuple(Partition(m) for m in quotient_types)
    lam = Partition(lam)
    if sum(m.size for m in types) != lam.size:
        return 0

    def count(M, rest):
        if not rest:
            return 1 if M.n == 0 else 0
        total = 0
        for s in invariant_subsets(M):
            if M.n - len(s) == rest[0].size and f1t_type(collapse(M, s)) == rest[0]:
                total += count(restrict(M, s), rest[1:])
        return total

    return count(f1t_module_of_type(lam), types)


def count_zero_one_matrices(col_sums, row_sums, bound=MATRIX_BOUND):
    """0/1 matrices with the given column and row sums, filled column by column."""
    cols = tuple(Partition(col_sums))
    rows = tuple(Partition(row_sums))
    if sum(cols) != sum(rows):
        return 0
    if sum(cols) > bound:
        raise BoundExceeded(f"matrix count with total {sum(cols)} exceeds bound {bound}")

    @lru_cache(maxsize=None)
    def fill(j, caps):
        if j == len(cols):
            return 1 if not any(caps) else 0
        total = 0
        avail = [i for i, c in enumerate(caps) if c]
        for chosen in combinations(avail, cols[j]):
            nxt = list(caps)
            for i in chosen:
                nxt[i] -= 1
            # rows with equal leftover capacity are interchangeable for the rest
            total += fill(j + 1, tuple(sorted(nxt, reverse=True)))
        return total

    return fill(0, rows)


def count_zero_one_matrices_brute(col_sums, row_sums):
    """Oracle: every 0/1 matrix of size l(row_sums) x l(col_sums)."""
    cols, rows = list(col_sums), list(row_sums)
    r, c = len(rows), len(cols)
    if r * c > 16:
        raise BoundExceeded("brute-force matrix enumeration is for tiny shapes")
    total = 0
    for bits in range(1 << (r * c)):
        m = [[(bits >> (i * c + j)) & 1 for j in range(c)] for i in range(r)]
        if [sum(row) for row in m] == rows and [sum(m[i][j] for i in range(r)) for j in range(c)] == cols:
            total += 1
    return total


def f1t_product(a, b):
    """Product in Hall(F_1[[t]]) on the u basis: u_mu u_nu = sum g^lam_{mu nu} u_lam."""
    from .partitions import partitions_of

    out = {}
    for mu, x in a.items():
        for nu, y in b.items():
            for lam in partitions_of(mu.size + nu.size):
                g = f1t_hall_constant(lam, mu, nu)
                if g:
                    out[lam] = out.get(lam, 0) + x * y * g
    return HallElement(out)


def elementary_product_expansion(lam):
    """u_(1^l1) u_(1^l2) ... in the u basis, by products and by matrix counting."""
    from .partitions import partitions_of

    lam = Partition(lam)
    prod = HallElement.basis(Partition())
    for part in lam:
        prod = f1t_product(prod, HallElement.basis(ones(part)))
    counted = HallElement({mu: count_zero_one_matrices(lam, mu) for mu in partitions_of(lam.size)})
    if prod != counted:
        raise ConsistencyError(f"product expansion {prod} disagrees with matrix counts {counted}")
    return prod


def dual(M):
    """Reverse every edge of the forest: y = T(x) becomes T*(y) = x."""
    action = [0] * M.n
    for x in range(1, M.n + 1):
        y = M.apply(x)
        if y:
            action[y - 1] = x
    return F1tModule(action)


def all_f1t_modules(n):
    """Every F1tModule on n labelled points, each once (for exhaustive checks).

    Point k is added either as a new chain or inserted at any position of an
    existing chain; chains are lists x1 -> x2 -> ... -> xL -> *.
    """
    out = []

    def rec(k, chains):
        if k > n:
            action = [0] * n
            for chain in chains:
                for a, b in zip(chain, chain[1:]):
                    action[a - 1] = b
            out.append(F1tModule(action))
            return
        chains.append([k])
        rec(k + 1, chains)
        chains.pop()
        for chain in chains:
            for pos in range(len(chain) + 1):
                chain.insert(pos, k)
                rec(k + 1, chains)
                chain.pop(pos)

    rec(1, [])
    return out
