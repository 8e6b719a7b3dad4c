"""Hall algebra arithmetic over interchangeable backends.

Structure constants follow u_mu u_nu = sum_lam g^lam_{mu nu} u_lam, where
g^lam_{mu nu} counts subobjects of type nu whose quotient has type mu.  The
coproduct lists the quotient label first.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import comb, factorial, perm

from .algebra import HallElement, TensorElement
from .errors import BoundExceeded, InvalidArgument
from .f1 import f1_hall_constant, f1t_flag_count, f1t_hall_constant, f1t_module_of_type
from .fq_linear import (aut_of_type, extension_groupoid_cardinality, flag_count_direct,
                        gl_order, hall_constant_direct, hom_count)
from .partitions import Partition, ones, partitions_of


class HallBackend:
    """Interface: labels, structure constants, automorphisms, homs, extensions."""

    id = "abstract"
    hereditary = False
    label_bound = 6

    def zero(self):
        raise NotImplementedError

    def labels(self, size):
        raise NotImplementedError

    def size_of(self, label):
        raise NotImplementedError

    def product_constant(self, lam, mu, nu):
        raise NotImplementedError

    def aut_count(self, lam):
        raise NotImplementedError

    def hom_count(self, a, b):
        raise NotImplementedError

    def ext_cardinality(self, quot, sub, mid):
        """|Ext(quot, sub)^mid| as an exact rational; default from Hall numbers and automorphisms."""
        if self.size_of(quot) + self.size_of(sub) != self.size_of(mid):
            return Fraction(0)
        g = self.product_constant(mid, quot, sub)
        return Fraction(g * self.aut_count(sub) * self.aut_count(quot), self.aut_count(mid))

    def ext1_count(self, a, b):
        """|Ext^1(a, b)| = |Hom(a, b)| times the cardinality of all extensions of a by b."""
        total = sum((self.ext_cardinality(a, b, x)
                     for x in self.labels(self.size_of(a) + self.size_of(b))), Fraction(0))
        value = total * self.hom_count(a, b)
        if value.denominator != 1:
            raise ArithmeticError(f"Ext^1 count {value} is not an integer")
        return int(value)

    def flag_count(self, lam, types):
        return None

    def check_label(self, lam):
        if self.size_of(lam) > self.label_bound:
            raise BoundExceeded(f"label {lam} exceeds backend bound {self.label_bound}")

    def cofinitary(self, size=2):
        """Every object up to `size` has finitely many subobjects (sanity: counts are finite)."""
        for lam in self.labels(size):
            total = sum(self.product_constant(lam, mu, nu)
                        for k in range(size + 1)
                        for mu in self.labels(size - k) for nu in self.labels(k))
            if total < 1:
                return False
        return True

    def __repr__(self):
        return f"<{type(self).__name__} {self.id}>"


class FqModuleBackend(HallBackend):
    """Modules over F_q[t]/(t^N), labelled by partitions with parts <= N."""

    def __init__(self, q, N=6, label_bound=6):
        self.q, self.N = q, N
        self.id = f"fq:{q}:{N}"
        self.label_bound = label_bound
        self.hereditary = N == 1

    def zero(self):
        return Partition()

    def labels(self, size):
        return [lam for lam in partitions_of(size) if not lam or lam[0] <= self.N]

    def size_of(self, lam):
        return Partition(lam).size

    def product_constant(self, lam, mu, nu):
        return hall_constant_direct(self.q, lam, mu, nu)

    def aut_count(self, lam):
        return aut_of_type(self.q, Partition(lam))

    def hom_count(self, a, b):
        return hom_count(self.q, Partition(a), Partition(b))

    def ext_cardinality(self, quot, sub, mid):
        return extension_groupoid_cardinality(self.q, quot, sub, mid, self.N)

    def flag_count(self, lam, types):
        return flag_count_direct(self.q, lam, types)


class VectFqBackend(HallBackend):
    """Finite-dimensional F_q vector spaces labelled by dimension."""

    hereditary = True

    def __init__(self, q, label_bound=6):
        self.q = q
        self.id = f"vect:{q}"
        self.label_bound = label_bound

    def zero(self):
        return 0

    def labels(self, size):
        return [size]

    def size_of(self, n):
        return int(n)

    def product_constant(self, n, a, b):
        return hall_constant_direct(self.q, ones(n), ones(a), ones(b))

    def aut_count(self, n):
        return gl_order(self.q, n)

    def hom_count(self, a, b):
        return self.q ** (a * b)

    def ext_cardinality(self, quot, sub, mid):
        return extension_groupoid_cardinality(self.q, ones(quot), ones(sub), ones(mid), 1)

    def ext1_count(self, a, b):
        return 1

    def flag_count(self, n, types):
        return flag_count_direct(self.q, ones(n), [ones(t) for t in types])


class VectF1Backend(HallBackend):
    """Pointed finite sets labelled by their number of non-base points."""

    id = "f1"

    def __init__(self, label_bound=12):
        self.label_bound = label_bound

    def zero(self):
        return 0

    def labels(self, size):
        return [size]

    def size_of(self, n):
        return int(n)

    def product_constant(self, n, a, b):
        if a + b != n:
            return 0
        return f1_hall_constant(a, b)

    def aut_count(self, n):
        return factorial(n)

    def hom_count(self, a, b):
        """Pointed maps injective away from the base point: partial injections."""
        return sum(comb(a, k) * perm(b, k) for k in range(min(a, b) + 1))

    def flag_count(self, n, types):
        if sum(types) != n:
            return 0
        out, left = 1, n
        for t in types:
            out *= comb(left, t)
            left -= t
        return out


@lru_cache(maxsize=None)
def f1t_aut_count(lam):
    """Permutations of the points commuting with the action; brute force for small modules."""
    M = f1t_module_of_type(lam)
    if M.n > 8:
        raise BoundExceeded("F1t automorphism enumeration is for modules on <= 8 points")
    count = 0
    for p in permutations(range(1, M.n + 1)):
        f = (0,) + p
        if all(f[M.apply(x)] == M.apply(f[x]) for x in range(1, M.n + 1)):
            count += 1
    return count


@lru_cache(maxsize=None)
def f1t_hom_count(src, dst):
    """Pointed maps commuting with T and injective away from the preimage of *."""
    A, B = f1t_module_of_type(src), f1t_module_of_type(dst)
    if (B.n + 1) ** A.n > 1 << 20:
        raise BoundExceeded("F1t hom enumeration too large")
    count = 0
    for images in product(range(B.n + 1), repeat=A.n):
        f = (0,) + images
        if any(f[A.apply(x)] != B.apply(f[x]) for x in range(1, A.n + 1)):
            continue
        hit = [y for y in images if y]
        if len(hit) == len(set(hit)):
            count += 1
    return count


class F1tBackend(HallBackend):
    """Pointed sets with nilpotent endomorphism, labelled by partitions."""

    id = "f1t"

    def __init__(self, label_bound=8):
        self.label_bound = label_bound

    def zero(self):
        return Partition()

    def labels(self, size):
        return partitions_of(size)

    def size_of(self, lam):
        return Partition(lam).size

    def product_constant(self, lam, mu, nu):
        return f1t_hall_constant(Partition(lam), Partition(mu), Partition(nu))

    def aut_count(self, lam):
        return f1t_aut_count(Partition(lam))

    def hom_count(self, a, b):
        return f1t_hom_count(Partition(a), Partition(b))

    def flag_count(self, lam, types):
        return f1t_flag_count(lam, types)


def parse_backend(backend_id):
    """'fq:<q>:<N>', 'vect:<q>', 'f1' or 'f1t'."""
    from .fields import prime_power

    parts = backend_id.split(":")
    try:
        if parts[0] == "fq" and len(parts) == 3:
            q, N = int(parts[1]), int(parts[2])
            prime_power(q)
            if N < 1:
                raise InvalidArgument("N must be positive")
            return FqModuleBackend(q, N)
        if parts[0] == "vect" and len(parts) == 2:
            q = int(parts[1])
            prime_power(q)
            return VectFqBackend(q)
    except ValueError as exc:
        raise InvalidArgument(f"bad backend id {backend_id!r}: {exc}") from None
    if backend_id == "f1":
        return VectF1Backend()
    if backend_id == "f1t":
        return F1tBackend()
    raise InvalidArgument(f"unknown backend {backend_id!r}")


# products and coproducts

def unit(backend):
    return HallElement.basis(backend.zero())


def hall_multiply(backend, a, b, opposite=False):
    """Bilinear product; with opposite=True the factors are swapped in each constant."""
    out = {}
    for x, cx in a.terms.items():
        backend.check_label(x)
        for y, cy in b.terms.items():
            backend.check_label(y)
            size = backend.size_of(x) + backend.size_of(y)
            for lam in backend.labels(size):
                g = backend.product_constant(lam, y, x) if opposite else backend.product_constant(lam, x, y)
                if g:
                    out[lam] = out.get(lam, 0) + cx * cy * g
    return HallElement(out)


def coproduct_prime(backend, a):
    """Sum over (quotient, sub) of |Ext(quotient, sub)^B| for every basis term 1_B."""
    out = {}
    for mid, c in a.terms.items():
        backend.check_label(mid)
        n = backend.size_of(mid)
        for k in range(n + 1):
            for quot in backend.labels(n - k):
                for sub in backend.labels(k):
                    w = backend.ext_cardinality(quot, sub, mid)
                    if w:
                        key = (quot, sub)
                        out[key] = out.get(key, 0) + c * w
    return TensorElement(out)


def twist_factor(backend, a1, b):
    """|Ext^1(a1, b)| / |Hom(a1, b)|."""
    return Fraction(backend.ext1_count(a1, b), backend.hom_count(a1, b))


def twisted_tensor_multiply(backend, x, y):
    out = TensorElement()
    for (a, b), cx in x.terms.items():
        for (a1, b1), cy in y.terms.items():
            left = hall_multiply(backend, HallElement.basis(a), HallElement.basis(a1))
            right = hall_multiply(backend, HallElement.basis(b), HallElement.basis(b1))
            f = twist_factor(backend, a1, b) * cx * cy
            out = out + TensorElement({(l, r): f * cl * cr
                                       for l, cl in left.terms.items()
                                       for r, cr in right.terms.items()})
    return out


def tensor_product(x, y):
    """Plain tensor of two Hall elements."""
    return TensorElement({(a, b): ca * cb for a, ca in x.terms.items() for b, cb in y.terms.items()})


def green_compatibility_check(backend, a_label, b_label):
    """Compare coproduct of a product with the twisted product of coproducts.

    Returns (ok, report); the report carries both sides and the first
    differing term.
    """
    if not backend.hereditary:
        raise InvalidArgument(f"{backend.id}: the compatibility is only checked for hereditary backends")
    a, b = HallElement.basis(a_label), HallElement.basis(b_label)
    lhs = coproduct_prime(backend, hall_multiply(backend, a, b))
    rhs = twisted_tensor_multiply(backend, coproduct_prime(backend, a), coproduct_prime(backend, b))
    diff = None
    for key in sorted(set(lhs.terms) | set(rhs.terms), key=str):
        if lhs.terms.get(key, 0) != rhs.terms.get(key, 0):
            diff = {"term": [str(key[0]), str(key[1])],
                    "lhs": str(lhs.terms.get(key, 0)), "rhs": str(rhs.terms.get(key, 0))}
            break
    return diff is None, {"lhs": lhs.format(), "rhs": rhs.format(), "first_difference": diff}


def _label_tuples(backend, total_bound, arity):
    labels = [lab for n in range(total_bound + 1) for lab in backend.labels(n)]
    for combo in product(labels, repeat=arity):
        if sum(backend.size_of(x) for x in combo) <= total_bound:
            yield combo


def associativity_check(backend, size_bound):
    """Both bracketings of every triple product agree, and agree with flag counts when available."""
    g = backend.product_constant
    checked = 0
    for mu, nu, lam in _label_tuples(backend, size_bound, 3):
        n_mn = backend.size_of(mu) + backend.size_of(nu)
        n_nl = backend.size_of(nu) + backend.size_of(lam)
        total = n_mn + backend.size_of(lam)
        for pi in backend.labels(total):
            left = sum(g(tau, mu, nu) * g(pi, tau, lam) for tau in backend.labels(n_mn))
            right = sum(g(pi, mu, tau) * g(tau, nu, lam) for tau in backend.labels(n_nl))
            flags = backend.flag_count(pi, [mu, nu, lam])
            checked += 1
            if left != right or (flags is not None and flags != left):
                return False, {"mu": str(mu), "nu": str(nu), "lam": str(lam), "pi": str(pi),
                               "left": left, "right": right, "flags": flags}
    return True, {"checked": checked}


def coassociativity_check(backend, size_bound):
    """(Delta' x id) Delta' = (id x Delta') Delta' on every basis element up to the bound."""
    checked = 0
    for n in range(size_bound + 1):
        for mid in backend.labels(n):
            first = coproduct_prime(backend, HallElement.basis(mid))
            left, right = {}, {}
            for (a, b), c in first.terms.items():
                for (a1, a2), c1 in coproduct_prime(backend, HallElement.basis(a)).terms.items():
                    key = (a1, a2, b)
                    left[key] = left.get(key, 0) + c * c1
                for (b1, b2), c2 in coproduct_prime(backend, HallElement.basis(b)).terms.items():
                    key = (a, b1, b2)
                    right[key] = right.get(key, 0) + c * c2
            left = {k: v for k, v in left.items() if v}
            right = {k: v for k, v in right.items() if v}
            checked += 1
            if left != right:
                return False, {"label": str(mid)}
    return True, {"checked": checked}


def opposite_check(backend, size_bound):
    """The opposite product of (a, b) equals the product of (b, a)."""
    for x, y in _label_tuples(backend, size_bound, 2):
        ex, ey = HallElement.basis(x), HallElement.basis(y)
        if hall_multiply(backend, ex, ey, opposite=True) != hall_multiply(backend, ey, ex):
            return False
    return True


def derived_hall_constant(hom_xz_y, hom_shift_xz, hom_shift_xx, aut_x):
    """|Hom(X,Z)_Y| prod_i |Hom(X[i],Z)|^(-1)^i / (|Aut X| prod_i |Hom(X[i],X)|^(-1)^i), i >= 1."""
    counts = [hom_xz_y, aut_x, *hom_shift_xz, *hom_shift_xx]
    if any(c <= 0 for c in counts):
        raise InvalidArgument("all supplied counts must be positive")
    value = Fraction(hom_xz_y, aut_x)
    for i, h in enumerate(hom_shift_xz, start=1):
        value *= Fraction(h) ** (-1) ** i
    for i, h in enumerate(hom_shift_xx, start=1):
        value /= Fraction(h) ** (-1) ** i
    return value


def multiplication_table(backend, size_bound, opposite=False):
    """{(x, y): x * y} for all labels with total size within the bound."""
    return {(x, y): hall_multiply(backend, HallElement.basis(x), HallElement.basis(y), opposite)
            for x, y in _label_tuples(backend, size_bound, 2)}
