"""Finite modules over F_q[t]/(t^N) and brute-force subobject counts.

A module is F_q^d with a nilpotent matrix T acting on row vectors, v -> v @ T.
Every T used here is strictly upper triangular (T[c, c'] != 0 only if c' > c),
so each coordinate suffix span(e_c, e_{c+1}, ...) is T-invariant.  That makes
an invariant subspace's reduced row echelon form buildable from the bottom row
up: every suffix of its rows spans an invariant subspace, and adding a row v
with a new, smaller pivot keeps invariance iff v @ T lies in the span already
built.  That condition is linear in the free entries of v.
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

import numpy as np

from . import linalg as la
from .errors import BoundExceeded, InvalidArgument
from .fields import field, prime_power, prime_powers
from .partitions import Partition, conjugate, contains, n_stat
from .qpoly import QPoly, interpolate_integer_poly

ELEMENT_BOUND = 2 ** 20
NODE_BOUND = 2_000_000
HALL_POLY_SIZE_BOUND = 7
CHUNK = 1 << 15


def _check_q(q):
    prime_power(q)
    return field(q)


def jordan_matrix(lam):
    """Nilpotent matrix of type lam: basis e_{i,a} chain by chain, e_{i,a} -> e_{i,a+1}."""
    lam = Partition(lam)
    d = lam.size
    t = np.zeros((d, d), dtype=np.int64)
    off = 0
    for part in lam:
        for a in range(part - 1):
            t[off + a, off + a + 1] = 1
        off += part
    return t


def _nilpotency_index(F, t):
    d = t.shape[0]
    p = la.identity(d)
    for j in range(d + 1):
        if not p.any():
            return j
        p = la.fmatmul(F, p, t)
    raise InvalidArgument("matrix is not nilpotent")


def _type_from_dims(dims):
    """Partition whose conjugate is (dims[0]-dims[1], dims[1]-dims[2], ...)."""
    conj = [dims[j - 1] - dims[j] for j in range(1, len(dims))]
    conj = [c for c in conj if c]
    return conjugate(Partition(conj))


class FqModule:
    """F_q^d with a strictly upper triangular nilpotent action T."""

    def __init__(self, q, t, N=None, type_=None):
        self.F = _check_q(q)
        self.q = q
        t = np.asarray(t, dtype=np.int64)
        if t.ndim != 2 or t.shape[0] != t.shape[1]:
            raise InvalidArgument("action must be a square matrix")
        if np.triu(t, 1).tolist() != t.tolist():
            raise InvalidArgument("action must be strictly upper triangular")
        self.T = t
        self.T.setflags(write=False)
        self.dim = t.shape[0]
        self.height = _nilpotency_index(self.F, t)
        self.N = self.height if N is None else N
        if self.height > max(self.N, 0) and self.dim:
            raise InvalidArgument(f"t^{self.N} does not act by zero")
        self.type_ = type_of(self) if type_ is None else Partition(type_)

    @property
    def size(self):
        return self.q ** self.dim

    def act(self, v):
        return la.fmatmul(self.F, np.asarray(v, dtype=np.int64), self.T)

    def elements(self, bound=ELEMENT_BOUND):
        if self.size > bound:
            raise BoundExceeded(f"{self.size} elements exceed bound {bound}")
        return [tuple(v) for v in la.coefficient_grid(self.q, self.dim).tolist()]

    def chunks(self, v):
        """Split a coordinate vector into truncated polynomials, one per Jordan block."""
        out, off = [], 0
        for part in self.type_:
            out.append(tuple(v[off:off + part]))
            off += part
        return out

    def __repr__(self):
        return f"FqModule(q={self.q}, type={list(self.type_)}, N={self.N})"


def module_of_type(q, lam, N=None, bound=ELEMENT_BOUND):
    lam = Partition(lam)
    if N is None:
        N = max(lam[0] if lam else 1, 1)
    if N < 1:
        raise InvalidArgument("nilpotency order must be positive")
    if lam and lam[0] > N:
        raise InvalidArgument(f"type {list(lam)} needs t^{lam[0]} != 0 but N = {N}")
    if q ** lam.size > bound:
        raise BoundExceeded(f"q^|lambda| = {q ** lam.size} exceeds bound {bound}")
    return FqModule(q, jordan_matrix(lam), N=N, type_=lam)


@dataclass(frozen=True)
class QuotientOf:
    """Descriptor for M/A without materializing cosets."""
    sub: "Submodule"


class Submodule:
    def __init__(self, parent, basis, pivots):
        self.parent = parent
        self.basis = np.asarray(basis, dtype=np.int64).reshape(len(pivots), parent.dim)
        self.pivots = tuple(pivots)

    @property
    def dim(self):
        return len(self.pivots)

    @property
    def generators(self):
        return [tuple(r) for r in self.basis.tolist()]

    def key(self):
        return (self.dim, tuple(self.basis.ravel().tolist()))

    def elements(self, bound=ELEMENT_BOUND):
        """Sorted element list (the canonical element set)."""
        F = self.parent.F
        if F.q ** self.dim > bound:
            raise BoundExceeded("submodule too large to list")
        grid = la.coefficient_grid(F.q, self.dim)
        pts = la.fmatmul(F, grid, self.basis) if self.dim else np.zeros((1, self.parent.dim), dtype=np.int64)
        return sorted(tuple(v) for v in pts.tolist())

    def restricted_action(self):
        """Matrix of T on this submodule in the basis of its echelon rows."""
        if not self.dim:
            return np.zeros((0, 0), dtype=np.int64)
        bt = la.fmatmul(self.parent.F, self.basis, self.parent.T)
        return bt[:, list(self.pivots)]

    def as_module(self):
        return FqModule(self.parent.q, self.restricted_action(), N=self.parent.N)

    def type(self):
        return _sub_types(self.parent.F, self.parent.T, self.basis[None], self.dim)[0][0]

    def quotient_type(self):
        return _sub_types(self.parent.F, self.parent.T, self.basis[None], self.dim)[0][1]

    def quotient(self):
        return QuotientOf(self)

    def __eq__(self, other):
        return isinstance(other, Submodule) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Submodule(dim={self.dim}, rows={self.generators})"


def type_of(x):
    """Isomorphism type of a module, submodule or quotient descriptor."""
    if isinstance(x, Submodule):
        return x.type()
    if isinstance(x, QuotientOf):
        return x.sub.quotient_type()
    if isinstance(x, FqModule):
        F, t = x.F, x.T
        dims = [x.dim]
        p = la.identity(x.dim)
        while dims[-1]:
            p = la.fmatmul(F, p, t)
            dims.append(la.rank(F, p))
        return _type_from_dims(dims)
    raise TypeError(f"no type for {x!r}")


# enumeration kernel

def _invariant_subspaces(F, t, dims=None, node_bound=NODE_BOUND):
    """Yield (rows, pivots) for every t-invariant subspace, each exactly once.

    rows is a (k, d) array in reduced row echelon form.  When `dims` is given,
    only subspaces of those dimensions are yielded (the search is pruned).
    """
    d = t.shape[0]
    tl = t.tolist()
    sub, mul = F.sub_l, F.mul_l
    top = d if dims is None else max(dims, default=-1)
    seen = 0
    stack = [([], [])]
    while stack:
        rows, piv = stack.pop()
        seen += 1
        if seen > node_bound:
            raise BoundExceeded(f"more than {node_bound} invariant subspaces")
        if dims is None or len(piv) in dims:
            yield np.array(rows, dtype=np.int64).reshape(len(piv), d), tuple(piv)
        if len(piv) >= top:
            continue
        lo = piv[0] if piv else d
        pset = set(piv)
        for p in range(lo - 1, -1, -1):
            free = [c for c in range(p + 1, d) if c not in pset]

            def residual(w):
                w = list(w)
                for r, c in zip(rows, piv):
                    f = w[c]
                    if f:
                        w = [sub[x][mul[f][y]] for x, y in zip(w, r)]
                return [w[c] for c in free]

            if free:
                cols = [residual(tl[f]) for f in free]
                a = np.array(cols, dtype=np.int64).T
                b = F.neg[np.array(residual(tl[p]), dtype=np.int64)]
                sol = la.solve_affine(F, a, b)
                if sol is None:
                    continue
                pts = la.affine_points(F, *sol).tolist()
            else:
                if any(residual(tl[p])):
                    continue
                pts = [[]]
            for x in pts:
                v = [0] * d
                v[p] = 1
                for c, val in zip(free, x):
                    v[c] = val
                stack.append(([v] + rows, [p] + piv))


def _sub_types(F, t, bs, k):
    """(sub type, quotient type) for a stack of echelon bases bs of shape (n, k, d)."""
    n, _, d = bs.shape
    if n == 0:
        return []
    powers = []
    p = la.identity(d)
    while True:
        p = la.fmatmul(F, p, t)
        if not p.any():
            break
        powers.append(p)
    sub_dims = [np.full(n, k, dtype=np.int64)]
    quot_dims = [np.full(n, d - k, dtype=np.int64)]
    for p in powers:
        out_s, out_q = [], []
        for lo in range(0, n, CHUNK):
            chunk = bs[lo:lo + CHUNK]
            m = len(chunk)
            out_s.append(la.batch_rank(F, la.fmatmul(F, chunk, p)) if k else np.zeros(m, dtype=np.int64))
            stacked = np.concatenate([chunk, np.broadcast_to(p, (m, d, d))], axis=1)
            out_q.append(la.batch_rank(F, stacked) - k)
        sub_dims.append(np.concatenate(out_s))
        quot_dims.append(np.concatenate(out_q))
    sub_dims.append(np.zeros(n, dtype=np.int64))
    quot_dims.append(np.zeros(n, dtype=np.int64))
    s_arr = np.stack(sub_dims, axis=1)
    q_arr = np.stack(quot_dims, axis=1)
    memo = {}
    out = []
    for srow, qrow in zip(s_arr.tolist(), q_arr.tolist()):
        key = (tuple(srow), tuple(qrow))
        if key not in memo:
            memo[key] = (_type_from_dims(srow), _type_from_dims(qrow))
        out.append(memo[key])
    return out


def _collect(F, t, dims=None):
    """Group invariant subspaces by dimension: {k: (stack, pivots list)}."""
    groups = {}
    for rows, piv in _invariant_subspaces(F, t, dims):
        groups.setdefault(len(piv), ([], []))
        groups[len(piv)][0].append(rows)
        groups[len(piv)][1].append(piv)
    d = t.shape[0]
    return {k: (np.stack(rs) if rs else np.zeros((0, k, d), dtype=np.int64), ps)
            for k, (rs, ps) in groups.items()}


def enumerate_submodules(M, sub_type=None, quot_type=None):
    """All submodules of M, optionally filtered by sub and quotient type, in canonical order."""
    sub_type = None if sub_type is None else Partition(sub_type)
    quot_type = None if quot_type is None else Partition(quot_type)
    if M.size > ELEMENT_BOUND:
        raise BoundExceeded(f"module with {M.size} elements exceeds bound")
    dims = None
    if sub_type is not None:
        dims = [sub_type.size]
    elif quot_type is not None:
        dims = [M.dim - quot_type.size]
    if dims is not None and not 0 <= dims[0] <= M.dim:
        return []
    out = []
    for k, (bs, pivs) in sorted(_collect(M.F, M.T, dims).items()):
        types = _sub_types(M.F, M.T, bs, k)
        for b, piv, (st, qt) in zip(bs, pivs, types):
            if sub_type is not None and st != sub_type:
                continue
            if quot_type is not None and qt != quot_type:
                continue
            out.append(Submodule(M, b, piv))
    out.sort(key=Submodule.key)
    return out


def enumerate_submodules_by_closure(M, bound=4096):
    """Oracle: every submodule as a frozenset of elements, by closing under +, scalars and T.

    Grows submodules one generator at a time starting from zero, so every
    submodule is reached.  Only for tiny modules.
    """
    if M.size > bound:
        raise BoundExceeded("closure oracle is for tiny modules only")
    F, d = M.F, M.dim
    tl = M.T.tolist()
    elems = M.elements()

    def act(v):
        out = [0] * d
        for i, x in enumerate(v):
            if x:
                for j, y in enumerate(tl[i]):
                    if y:
                        out[j] = F.add_l[out[j]][F.mul_l[x][y]]
        return tuple(out)

    def close(gens):
        span = {tuple([0] * d)}
        frontier = list(gens)
        while frontier:
            g = frontier.pop()
            if g in span:
                continue
            new = set()
            for s in span:
                for c in range(1, F.q):
                    new.add(tuple(F.add_l[a][F.mul_l[c][b]] for a, b in zip(s, g)))
            span |= new
            span.add(g)
            frontier.append(act(g))
        return frozenset(span)

    found = {close([])}
    queue = list(found)
    while queue:
        s = queue.pop()
        for x in elems:
            if x not in s:
                c = close(list(s) + [x])
                if c not in found:
                    found.add(c)
                    queue.append(c)
    return found


# censuses and Hall numbers

def _zero_census(d, q):
    """Census for T = 0: count echelon forms per pivot set without listing them."""
    out = Counter()
    for k in range(d + 1):
        total = 0
        for piv in combinations(range(d), k):
            pset = set(piv)
            free = sum(1 for p in piv for c in range(p + 1, d) if c not in pset)
            total += q ** free
        out[(Partition((1,) * k), Partition((1,) * (d - k)))] += total
    return out


_CENSUS_CACHE = {}


def census(q, t, dims=None):
    """Counter {(sub type, quotient type): number of submodules} for the action t."""
    F = _check_q(q)
    t = np.asarray(t, dtype=np.int64)
    key = (q, t.shape[0], t.tobytes(), None if dims is None else tuple(sorted(dims)))
    hit = _CENSUS_CACHE.get(key)
    if hit is not None:
        return hit
    if not t.any():
        out = _zero_census(t.shape[0], q)
        if dims is not None:
            out = Counter({k: v for k, v in out.items() if k[0].size in dims})
    else:
        out = Counter()
        for k, (bs, _) in _collect(F, t, dims).items():
            out.update(_sub_types(F, t, bs, k))
    _CENSUS_CACHE[key] = out
    return out


def module_census(q, lam):
    lam = Partition(lam)
    module_of_type(q, lam)
    return census(q, jordan_matrix(lam))


def hall_constant_direct(q, lam, mu, nu):
    """Number of submodules of type nu with quotient of type mu in the module of type lam."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    _check_q(q)
    if mu.size + nu.size != lam.size:
        return 0
    module_of_type(q, lam)
    return census(q, jordan_matrix(lam), dims=[nu.size]).get((nu, mu), 0)


def flag_count_direct(q, lam, quotient_types):
    """Chains M = M_0 > M_1 > ... > M_s = 0 with type(M_{i-1}/M_i) = quotient_types[i-1]."""
    lam = Partition(lam)
    types = tuple(Partition(m) for m in quotient_types)
    F = _check_q(q)
    if sum(m.size for m in types) != lam.size:
        return 0
    module_of_type(q, lam)
    memo = {}

    def count(t, rest):
        d = t.shape[0]
        key = (t.tobytes(), d, rest)
        if key in memo:
            return memo[key]
        if not rest:
            val = 1 if d == 0 else 0
        elif len(rest) == 1:
            val = 1 if type_of(FqModule(q, t)) == rest[0] else 0
        else:
            k = d - rest[0].size
            if not t.any():
                # every subspace is a submodule with zero action
                n_sub = census(q, t, dims=[k]).get((Partition((1,) * k), rest[0]), 0)
                val = n_sub * count(np.zeros((k, k), dtype=np.int64), rest[1:]) if n_sub else 0
            else:
                val = 0
                grouped = _collect(F, t, [k])
                if k in grouped:
                    bs, pivs = grouped[k]
                    for b, piv, (_, qt) in zip(bs, pivs, _sub_types(F, t, bs, k)):
                        if qt == rest[0]:
                            sub_t = la.fmatmul(F, b, t)[:, list(piv)]
                            val += count(sub_t, rest[1:])
        memo[key] = val
        return val

    return count(jordan_matrix(lam), types)


def hall_sample_points(size, count, element_bound=ELEMENT_BOUND):
    """The first `count` prime powers q <= 16 with q^size within the element bound."""
    pts = [q for q in prime_powers() if q ** size <= element_bound]
    if len(pts) < count:
        raise BoundExceeded(
            f"need {count} sample fields for modules of length {size}, only {len(pts)} admissible")
    return pts[:count]


def hall_degree_bound(lam, mu, nu):
    return n_stat(lam) - n_stat(mu) - n_stat(nu)


def hall_polynomial(lam, mu, nu, size_bound=HALL_POLY_SIZE_BOUND, with_samples=False):
    """Hall polynomial g^lam_{mu nu}(t) by interpolation with one held-out field.

    Triples with mu or nu not contained in lam are answered as zero without
    sampling: a submodule of type nu forces nu inside lam, and so does a
    quotient of type mu.
    """
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.size > size_bound:
        raise BoundExceeded(f"|lambda| = {lam.size} exceeds desk bound {size_bound}")
    samples = []
    if mu.size + nu.size != lam.size or not contains(lam, mu) or not contains(lam, nu):
        poly = QPoly()
    else:
        bound = hall_degree_bound(lam, mu, nu)
        qs = hall_sample_points(lam.size, max(bound, 0) + 2)
        if bound < 0:
            qs = qs[:1]
        samples = [(q, hall_constant_direct(q, lam, mu, nu)) for q in qs]
        poly = interpolate_integer_poly(samples, bound)
    if with_samples:
        return poly, samples
    return poly


def hall_polynomial_record(lam, mu, nu):
    poly = hall_polynomial(lam, mu, nu)
    return {"lambda": list(Partition(lam)), "mu": list(Partition(mu)),
            "nu": list(Partition(nu)), "poly": poly.to_json()}


# maps, automorphisms, extensions

def count_injections(q, m, n):
    """Injective linear maps F_q^m -> F_q^n."""
    if m > n:
        return 0
    out = 1
    for i in range(m):
        out *= q ** n - q ** i
    return out


def gl_order(q, n):
    return count_injections(q, n, n)


def _hom_space(F, t1, t2):
    d1, d2 = t1.shape[0], t2.shape[0]
    return la.solve_matrix_equations(
        F, (d1, d2),
        [(lambda x: la.fsub(F, la.fmatmul(F, t1, x), la.fmatmul(F, x, t2)),
          np.zeros((d1, d2), dtype=np.int64))])


def hom_count(q, src, dst):
    """|Hom_R(M_src, M_dst)| for Jordan modules, or for FqModule arguments."""
    F = _check_q(q)
    t1 = src.T if isinstance(src, FqModule) else jordan_matrix(src)
    t2 = dst.T if isinstance(dst, FqModule) else jordan_matrix(dst)
    if t1.shape[0] == 0 or t2.shape[0] == 0:
        return 1
    _, kernel = _hom_space(F, t1, t2)
    return q ** kernel.shape[0]


def hom_maps(q, src, dst, bound=ELEMENT_BOUND):
    """Every module map as a (d1, d2) matrix; tiny cases only."""
    F = _check_q(q)
    t1 = src.T if isinstance(src, FqModule) else jordan_matrix(src)
    t2 = dst.T if isinstance(dst, FqModule) else jordan_matrix(dst)
    d1, d2 = t1.shape[0], t2.shape[0]
    if d1 == 0 or d2 == 0:
        return np.zeros((1, d1, d2), dtype=np.int64)
    x0, kernel = _hom_space(F, t1, t2)
    if q ** kernel.shape[0] > bound:
        raise BoundExceeded("hom space too large to list")
    return la.affine_points(F, x0, kernel).reshape(-1, d1, d2)


def automorphism_count(M, bound=ELEMENT_BOUND):
    """|Aut(M)|: closed form when T = 0, otherwise invertible endomorphisms counted."""
    if not isinstance(M, FqModule):
        raise TypeError("automorphism_count expects an FqModule")
    F, d = M.F, M.dim
    if d == 0:
        return 1
    if not M.T.any():
        return gl_order(M.q, d)
    x0, kernel = _hom_space(F, M.T, M.T)
    s = kernel.shape[0]
    if M.q ** s > bound:
        raise BoundExceeded(f"End(M) has {M.q ** s} elements, above bound {bound}")
    grid = la.coefficient_grid(M.q, s)
    total = 0
    for lo in range(0, len(grid), CHUNK):
        pts = la.fmatmul(F, grid[lo:lo + CHUNK], kernel).reshape(-1, d, d)
        total += int((la.batch_rank(F, pts) == d).sum())
    return total


@lru_cache(maxsize=None)
def aut_of_type(q, lam):
    return automorphism_count(module_of_type(q, Partition(lam)))


def extension_groupoid_cardinality(q, quot, sub, mid, N=None):
    """Groupoid cardinality of extensions sub -> X -> quot with X of type mid.

    Objects are exact pairs (i, p) into a fixed model of mid, morphisms are
    automorphisms of the middle; the count of pairs is the number of
    submodules of the right types times |Aut(sub)| |Aut(quot)|.
    """
    quot, sub, mid = Partition(quot), Partition(sub), Partition(mid)
    if quot.size + sub.size != mid.size:
        return Fraction(0)
    if N is not None:
        for lam in (quot, sub, mid):
            if lam and lam[0] > N:
                raise InvalidArgument(f"type {list(lam)} does not live over t^{N} = 0")
    g = hall_constant_direct(q, mid, quot, sub)
    return Fraction(g * aut_of_type(q, sub) * aut_of_type(q, quot), aut_of_type(q, mid))


def extension_groupoid_cardinality_literal(q, quot, sub, mid, bound=1 << 16):
    """Same groupoid cardinality by listing every exact pair (i, p) on a model of mid."""
    F = _check_q(q)
    quot, sub, mid = Partition(quot), Partition(sub), Partition(mid)
    if quot.size + sub.size != mid.size:
        return Fraction(0)
    ins = hom_maps(q, sub, mid, bound)
    outs = hom_maps(q, mid, quot, bound)
    ins = ins[la.batch_rank(F, ins) == sub.size] if sub.size else ins
    outs = outs[la.batch_rank(F, outs) == quot.size] if quot.size else outs
    pairs = 0
    for i in ins:
        comp = la.fmatmul(F, i[None], outs)
        pairs += int((comp.reshape(len(outs), -1) == 0).all(axis=1).sum())
    return Fraction(pairs, automorphism_count(module_of_type(q, mid)))


# exact frames of vector spaces

@dataclass
class Frame:
    """Outer ring of a 3x3 diagram of vector spaces.

    Rows A -> B -> C and A'' -> B'' -> C''; columns A -> A' -> A'' and
    C -> C' -> C''.  Maps are matrices in the row-vector convention.
    """
    q: int
    ab: np.ndarray
    bc: np.ndarray
    a2b2: np.ndarray
    b2c2: np.ndarray
    aa1: np.ndarray
    a1a2: np.ndarray
    cc1: np.ndarray
    c1c2: np.ndarray

    @property
    def dims(self):
        return {"A": self.ab.shape[0], "B": self.ab.shape[1], "C": self.bc.shape[1],
                "A'": self.aa1.shape[1], "C'": self.cc1.shape[1],
                "A''": self.a2b2.shape[0], "B''": self.a2b2.shape[1], "C''": self.b2c2.shape[1]}


def is_short_exact(F, f, g):
    """0 -> X -f-> Y -g-> Z -> 0 exact (vector spaces)."""
    dx, dy = f.shape
    dz = g.shape[1]
    if g.shape[0] != dy or dx + dz != dy:
        return False
    if la.rank(F, f) != dx or la.rank(F, g) != dz:
        return False
    return not la.fmatmul(F, f, g).any() if dx and dz else True


def check_frame(frame):
    F = field(frame.q)
    return all(is_short_exact(F, f, g) for f, g in (
        (frame.ab, frame.bc), (frame.a2b2, frame.b2c2),
        (frame.aa1, frame.a1a2), (frame.cc1, frame.c1c2)))


def _incl(m, n, offset=0):
    out = np.zeros((m, n), dtype=np.int64)
    for i in range(m):
        out[i, offset + i] = 1
    return out


def _proj(n, m, offset=0):
    return _incl(m, n, offset).T.copy()


def split_frame(q, a, c, a2, c2):
    """Frame with B = A+C, A' = A+A'', C' = C+C'', B'' = A''+C'' and coordinate maps."""
    return Frame(
        q=q,
        ab=_incl(a, a + c), bc=_proj(a + c, c, a),
        a2b2=_incl(a2, a2 + c2), b2c2=_proj(a2 + c2, c2, a2),
        aa1=_incl(a, a + a2), a1a2=_proj(a + a2, a2, a),
        cc1=_incl(c, c + c2), c1c2=_proj(c + c2, c2, c),
    )


def _frame_completion_spaces(F, fr, u, s):
    """Affine spaces of (B -> Y) and (Y -> B'') maps compatible with fixed u, s."""
    d = fr.dims
    y = d["A'"] + d["C'"]
    v_space = la.solve_matrix_equations(F, (d["B"], y), [
        (lambda v: la.fmatmul(F, fr.ab, v), la.fmatmul(F, fr.aa1, u)),
        (lambda v: la.fmatmul(F, v, s), la.fmatmul(F, fr.bc, fr.cc1)),
    ])
    w_space = la.solve_matrix_equations(F, (y, d["B''"]), [
        (lambda w: la.fmatmul(F, u, w), la.fmatmul(F, fr.a1a2, fr.a2b2)),
        (lambda w: la.fmatmul(F, w, fr.b2c2), la.fmatmul(F, s, fr.c1c2)),
    ])
    return v_space, w_space


def frame_fiber_cardinality(q, frame, bound=1 << 18):
    """Groupoid cardinality of exact 3x3 squares completing a frame of vector spaces.

    GL(Y) moves the middle row to the split one with stabilizer Hom(C', A'),
    so it suffices to count completions of the fixed split middle row and
    divide by q^(dim A' dim C').
    """
    F = _check_q(q)
    if frame.q != q:
        raise InvalidArgument("frame lives over a different field")
    if not check_frame(frame):
        raise InvalidArgument("frame rows and columns must be short exact")
    d = frame.dims
    a1, c1 = d["A'"], d["C'"]
    y = a1 + c1
    if y != d["B"] + d["B''"]:
        return Fraction(0)
    u = _incl(a1, y)
    s = _proj(y, c1, a1)
    v_space, w_space = _frame_completion_spaces(F, frame, u, s)
    if v_space is None or w_space is None:
        return Fraction(0)
    n_v = q ** v_space[1].shape[0]
    n_w = q ** w_space[1].shape[0]
    if n_v * n_w > bound:
        raise BoundExceeded("too many candidate completions")
    vs = la.affine_points(F, *v_space).reshape(n_v, d["B"], y)
    ws = la.affine_points(F, *w_space).reshape(n_w, y, d["B''"])
    count = 0
    for v in vs:
        if d["B"] and la.rank(F, v) != d["B"]:
            continue
        for w in ws:
            if is_short_exact(F, v, w):
                count += 1
    return Fraction(count, q ** (a1 * c1))


def frame_fiber_cardinality_literal(q, frame, bound=1 << 16):
    """Brute force over all four maps into and out of a model Y, divided by |GL(Y)|."""
    F = _check_q(q)
    d = frame.dims
    y = d["A'"] + d["C'"]
    shapes = [(d["A'"], y), (y, d["C'"]), (d["B"], y), (y, d["B''"])]
    total = 1
    for m, n in shapes:
        total *= q ** (m * n)
    if total > bound:
        raise BoundExceeded("literal frame enumeration too large")
    us, ss, vs, ws = (la.all_matrices(q, m, n) for m, n in shapes)
    count = 0
    for u in us:
        for s in ss:
            if not is_short_exact(F, u, s):
                continue
            for v in vs:
                if la.fmatmul(F, frame.ab, v).tolist() != la.fmatmul(F, frame.aa1, u).tolist():
                    continue
                if la.fmatmul(F, v, s).tolist() != la.fmatmul(F, frame.bc, frame.cc1).tolist():
                    continue
                for w in ws:
                    if la.fmatmul(F, u, w).tolist() != la.fmatmul(F, frame.a1a2, frame.a2b2).tolist():
                        continue
                    if la.fmatmul(F, w, frame.b2c2).tolist() != la.fmatmul(F, s, frame.c1c2).tolist():
                        continue
                    if is_short_exact(F, v, w):
                        count += 1
    return Fraction(count, gl_order(q, y))
