"""Truncated groupoids of flags of F_q-vector spaces, their faces and degeneracies.

An object of S_n is (d, (V_1, ..., V_{n-1})) with 0 = V_0 <= V_1 <= ... <=
V_n = F_q^d, each V_i stored as its reduced row echelon basis.  Every
subquotient V_j / V_i gets the standard coordinates coming from those bases,
so the object stands for a strict diagram of standard spaces and a morphism
is a single g in GL_d moving one flag onto another (all other components of
the diagram isomorphism are induced).

Faces: d_0 divides by V_1, d_n restricts to V_{n-1}, the others forget V_k.
Degeneracies repeat V_k.
"""

from functools import lru_cache
from itertools import combinations, product

from .errors import BoundExceeded, InvalidArgument
from .fields import field
from .groupoids import (Functor, GroupoidSpan, generic_action_groupoid, locate_in_profile,
                        pairing, product_groupoid, two_pullback_profile)

MATRIX_ENTRY_BOUND = 512


# small matrices as tuples of row tuples

def _mm(F, a, b, ncols):
    add, mul = F.add_l, F.mul_l
    out = []
    for row in a:
        acc = [0] * ncols
        for x, brow in zip(row, b):
            if x:
                mx = mul[x]
                acc = [add[s][mx[y]] for s, y in zip(acc, brow)]
        out.append(tuple(acc))
    return tuple(out)


def _rref(F, rows, ncols):
    """Reduced row echelon basis (zero rows dropped) and pivot columns."""
    rows = [list(r) for r in rows]
    mul, sub, inv = F.mul_l, F.sub_l, F.inv_l
    pivots, r = [], 0
    for j in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][j]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        s = inv[rows[r][j]]
        rows[r] = [mul[s][x] for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][j]:
                f = rows[i][j]
                rows[i] = [sub[x][mul[f][y]] for x, y in zip(rows[i], rows[r])]
        pivots.append(j)
        r += 1
    return tuple(tuple(x) for x in rows[:r]), tuple(pivots)


def _unit_rows(d):
    return tuple(tuple(int(i == j) for j in range(d)) for i in range(d))


@lru_cache(maxsize=None)
def general_linear_group(q, d):
    """GL_d(F_q) as row tuples, identity first."""
    F = field(q)
    e = _unit_rows(d)
    out = [e]
    for entries in product(range(q), repeat=d * d):
        g = tuple(tuple(entries[i * d:(i + 1) * d]) for i in range(d))
        if g != e and len(_rref(F, g, d)[0]) == d:
            out.append(g)
    return out


def _rref_matrices(q, k, m):
    """Every k x m matrix in reduced row echelon form of rank k."""
    out = []
    for pivots in combinations(range(m), k):
        free = [(i, j) for i, p in enumerate(pivots) for j in range(p + 1, m) if j not in pivots]
        for vals in product(range(q), repeat=len(free)):
            rows = [[0] * m for _ in range(k)]
            for i, p in enumerate(pivots):
                rows[i][p] = 1
            for (i, j), v in zip(free, vals):
                rows[i][j] = v
            out.append(tuple(tuple(r) for r in rows))
    return out


def subspaces_within(q, basis, d):
    """All subspaces of the row space of `basis` (an RREF basis in F^d)."""
    F = field(q)
    m = len(basis)
    out = []
    for k in range(m + 1):
        for c in _rref_matrices(q, k, m):
            out.append(_rref(F, _mm(F, c, basis, d), d)[0])
    return out


def _full_flag(x):
    d, inner = x
    return ((),) + inner + (_unit_rows(d),)


def _object_from_full(d, full):
    return (d, tuple(full[1:-1]))


def _quotient_data(F, V, d):
    """Projection F^d -> F^d / V in non-pivot coordinates, and the section back."""
    _, pivots = _rref(F, V, d) if V else ((), ())
    nonpiv = [j for j in range(d) if j not in pivots]
    row_of = {p: r for p, r in zip(pivots, V)}
    proj = []
    for j in range(d):
        if j in row_of:
            proj.append(tuple(F.sub_l[0][row_of[j][c]] for c in nonpiv))
        else:
            proj.append(tuple(int(j == c) for c in nonpiv))
    section = tuple(tuple(int(j == c) for j in range(d)) for c in nonpiv)
    return tuple(proj), section, len(nonpiv)


def _restriction_coords(F, W, d):
    _, pivots = _rref(F, W, d) if W else ((), ())
    return pivots


def _act(F, x, g):
    d, inner = x
    return (d, tuple(_rref(F, _mm(F, V, g, d), d)[0] for V in inner))


def _face_object(F, n, k, x):
    d, _ = x
    full = _full_flag(x)
    if k == 0:
        proj, _, dq = _quotient_data(F, full[1], d)
        new = [_rref(F, _mm(F, V, proj, dq), dq)[0] for V in full[1:]]
        return _object_from_full(dq, new)
    if k == n:
        W = full[n - 1]
        piv = _restriction_coords(F, W, d)
        new = [_rref(F, tuple(tuple(r[p] for p in piv) for r in V), len(piv))[0] for V in full[:n]]
        return _object_from_full(len(piv), new)
    return _object_from_full(d, full[:k] + full[k + 1:])


def _face_morphism(F, n, k, f):
    x, g = f
    d, _ = x
    full = _full_flag(x)
    if k == 0:
        y = _act(F, x, g)
        _, section, dq = _quotient_data(F, full[1], d)
        proj, _, _ = _quotient_data(F, _full_flag(y)[1], d)
        return (_face_object(F, n, k, x), _mm(F, _mm(F, section, g, d), proj, dq))
    if k == n:
        W = full[n - 1]
        y = _act(F, x, g)
        piv = _restriction_coords(F, _full_flag(y)[n - 1], d)
        image = _mm(F, W, g, d)
        return (_face_object(F, n, k, x), tuple(tuple(r[p] for p in piv) for r in image))
    return (_face_object(F, n, k, x), g)


def _degeneracy_object(n, k, x):
    d, _ = x
    full = _full_flag(x) if n else ((),)
    return _object_from_full(d, full[:k + 1] + full[k:])


@lru_cache(maxsize=None)
def truncated_flag_groupoid(q, n, dim_bound):
    """S_n restricted to flags whose top space has dimension <= dim_bound."""
    if not 0 <= n <= 3:
        raise InvalidArgument("flag groupoids are built for n in 0..3")
    if dim_bound < 0:
        raise InvalidArgument("dim_bound must be nonnegative")
    if q ** (dim_bound * dim_bound) > MATRIX_ENTRY_BOUND:
        raise BoundExceeded(f"GL_{dim_bound}(F_{q}) is beyond the desk bound")
    F = field(q)
    objects = []
    for d in range(dim_bound + 1) if n > 0 else [0]:
        chains = [(_unit_rows(d),)]
        for _ in range(n - 1):
            chains = [(V,) + c for c in chains for V in subspaces_within(q, c[0], d)]
        objects.extend((d, c[:-1]) for c in chains)
    groups = {d: general_linear_group(q, d) for d in range(dim_bound + 1)}
    S = generic_action_groupoid(objects, lambda x: groups[x[0]], lambda x, g: _act(F, x, g),
                                lambda g, h: _mm(F, g, h, len(g)), name=f"S_{n}(F_{q}, dim<={dim_bound})")
    S.q, S.n, S.dim_bound = q, n, dim_bound
    return S


@lru_cache(maxsize=None)
def face(q, n, k, dim_bound):
    """d_k: S_n -> S_{n-1}."""
    if not 0 <= k <= n or n < 1:
        raise InvalidArgument(f"no face d_{k} on S_{n}")
    F = field(q)
    return Functor(truncated_flag_groupoid(q, n, dim_bound), truncated_flag_groupoid(q, n - 1, dim_bound),
                   lambda x: _face_object(F, n, k, x), lambda f: _face_morphism(F, n, k, f))


@lru_cache(maxsize=None)
def degeneracy(q, n, k, dim_bound):
    """s_k: S_n -> S_{n+1}, repeating V_k."""
    if not 0 <= k <= n:
        raise InvalidArgument(f"no degeneracy s_{k} on S_{n}")
    return Functor(truncated_flag_groupoid(q, n, dim_bound), truncated_flag_groupoid(q, n + 1, dim_bound),
                   lambda x: _degeneracy_object(n, k, x), lambda f: (_degeneracy_object(n, k, f[0]), f[1]))


def _compose_maps(*functors):
    def on_obj(x):
        for G in functors:
            x = G.obj(x)
        return x

    def on_mor(f):
        for G in functors:
            f = G.mor(f)
        return f
    return on_obj, on_mor


def _agree(source, first, second):
    """Two chains of functors agree strictly on every object and morphism."""
    a, b = _compose_maps(*first), _compose_maps(*second)
    for x in source.objects:
        if a[0](x) != b[0](x):
            return f"objects differ at {x!r}"
    for f in source.morphisms():
        if a[1](f) != b[1](f):
            return f"morphisms differ at {f!r}"
    return None


def simplicial_identities(q, dim_bound):
    """d_i d_j = d_{j-1} d_i (i < j), and the three rules for d_i s_j, on S_n for n <= 3."""
    failures = []
    for n in (2, 3):
        S = truncated_flag_groupoid(q, n, dim_bound)
        for j in range(n + 1):
            for i in range(j):
                w = _agree(S, [face(q, n, j, dim_bound), face(q, n - 1, i, dim_bound)],
                           [face(q, n, i, dim_bound), face(q, n - 1, j - 1, dim_bound)])
                if w:
                    failures.append(f"d_{i} d_{j} on S_{n}: {w}")
    for n in (0, 1, 2):
        S = truncated_flag_groupoid(q, n, dim_bound)
        for j in range(n + 1):
            for i in range(n + 2):
                first = [degeneracy(q, n, j, dim_bound), face(q, n + 1, i, dim_bound)]
                if i < j:
                    second = [face(q, n, i, dim_bound), degeneracy(q, n - 1, j - 1, dim_bound)]
                elif i in (j, j + 1):
                    second = []
                else:
                    second = [face(q, n, i - 1, dim_bound), degeneracy(q, n - 1, j, dim_bound)]
                w = _agree(S, first, second)
                if w:
                    failures.append(f"d_{i} s_{j} on S_{n}: {w}")
    return failures


def _square_report(name, top, left, right, F, G):
    """Compare the top groupoid with the 2-pullback of F (after left) and G (after right)."""
    C = F.target
    profile = two_pullback_profile(F, G)
    hit = {}
    failures = []
    for z in top.class_representatives():
        a, b = left.obj(z), right.obj(z)
        if F.obj(a) != G.obj(b):
            failures.append(f"{name}: square does not commute at {z!r}")
            continue
        idx = locate_in_profile(F, G, profile, (a, b, C.identity(F.obj(a))))
        if idx in hit:
            failures.append(f"{name}: {z!r} and {hit[idx]!r} land in the same class")
        hit[idx] = z
        images = {(left.mor(g), right.mor(g)) for g in top.aut(z)}
        if len(images) != top.aut_order(z):
            failures.append(f"{name}: automorphisms of {z!r} are not detected by the two faces")
        if top.aut_order(z) != profile[idx][3]:
            failures.append(f"{name}: |Aut| {top.aut_order(z)} vs {profile[idx][3]} at {z!r}")
    missed = [i for i in range(len(profile)) if i not in hit]
    for i in missed:
        failures.append(f"{name}: 2-pullback class {profile[i][:2]!r} is not hit")
    return {"square": name, "classes": len(top.class_representatives()),
            "pullback_classes": len(profile), "failures": failures}


def two_segal_cardinality_check(q, dim_bound):
    """Square subdivisions of S_3 and the two lowest unitality squares, on iso classes and |Aut|.

    Returns (ok, report).
    """
    b = dim_bound
    S3 = truncated_flag_groupoid(q, 3, b)
    S1 = truncated_flag_groupoid(q, 1, b)
    squares = [
        _square_report("diagonal 02", S3, face(q, 3, 3, b), face(q, 3, 1, b), face(q, 2, 1, b), face(q, 2, 2, b)),
        _square_report("diagonal 13", S3, face(q, 3, 2, b), face(q, 3, 0, b), face(q, 2, 0, b), face(q, 2, 1, b)),
        _square_report("unit 0", S1, face(q, 1, 1, b), degeneracy(q, 1, 0, b), degeneracy(q, 0, 0, b),
                       face(q, 2, 2, b)),
        _square_report("unit 1", S1, face(q, 1, 0, b), degeneracy(q, 1, 1, b), degeneracy(q, 0, 0, b),
                       face(q, 2, 0, b)),
    ]
    simplicial = simplicial_identities(q, b)
    ok = not simplicial and all(not s["failures"] for s in squares)
    report = {"q": q, "dim_bound": b, "squares": squares, "simplicial_failures": simplicial,
              "not_checked": "subdivisions of polygons with more than four vertices"}
    return ok, report


@lru_cache(maxsize=None)
def truncated_hall_span(q, dim_bound):
    """S_1 x S_1 <- S_2 -> S_1: (sub, quotient) on the left, the middle space on the right."""
    S1 = truncated_flag_groupoid(q, 1, dim_bound)
    pair = product_groupoid(S1, S1)
    left = pairing(face(q, 2, 2, dim_bound), face(q, 2, 0, dim_bound), pair)
    return GroupoidSpan(left, face(q, 2, 1, dim_bound))


def unit_span(q, dim_bound):
    """S_0 <- S_0 -> S_1, the zero object."""
    from .groupoids import identity_functor

    return GroupoidSpan(identity_functor(truncated_flag_groupoid(q, 0, dim_bound)),
                        degeneracy(q, 0, 0, dim_bound))
