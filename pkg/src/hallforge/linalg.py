"""Dense linear algebra over GF(q) on integer-encoded numpy arrays.

Row-vector convention throughout: a matrix f of shape (m, n) is the map
x -> x @ f from F^m to F^n, so composition "first f then g" is f @ g.
"""

import itertools

import numpy as np


def fadd(F, a, b):
    return F.add[a, b]


def fsub(F, a, b):
    return F.sub[a, b]


def fneg(F, a):
    return F.neg[a]


def fscale(F, c, a):
    return F.mul[c, a]


def fmatmul(F, a, b):
    """Matrix product with broadcasting over leading axes."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if F.e == 1:
        return (a @ b) % F.p
    out = None
    for l in range(a.shape[-1]):
        term = F.mul[a[..., :, l:l + 1], b[..., l:l + 1, :]]
        out = term if out is None else F.add[out, term]
    if out is None:
        return np.zeros(a.shape[:-1] + b.shape[-1:], dtype=np.int64)
    return out


def identity(d):
    return np.eye(d, dtype=np.int64)


def fpow(F, t, k):
    out = identity(t.shape[0])
    for _ in range(k):
        out = fmatmul(F, out, t)
    return out


def batch_rank(F, x):
    """Ranks of a stack of matrices, shape (batch, rows, cols)."""
    x = np.array(x, dtype=np.int64, copy=True)
    if x.ndim == 2:
        x = x[None]
    nb, nr, nc = x.shape
    rank = np.zeros(nb, dtype=np.int64)
    if nb == 0 or nr == 0:
        return rank
    rows = np.arange(nr)
    for j in range(nc):
        live = rank < nr
        if not live.any():
            break
        nz = (x[:, :, j] != 0) & (rows[None, :] >= rank[:, None])
        has = nz.any(axis=1)
        if not has.any():
            continue
        sel = np.nonzero(has)[0]
        piv = nz[sel].argmax(axis=1)
        rk = rank[sel]
        top = x[sel, rk].copy()
        x[sel, rk] = x[sel, piv]
        x[sel, piv] = top
        prow = F.mul[F.inv[x[sel, rk, j]][:, None], x[sel, rk]]
        x[sel, rk] = prow
        # eliminate the pivot column below the pivot row only; rank needs no more
        factors = x[sel, :, j].copy()
        factors[rows[None, :] <= rk[:, None]] = 0
        x[sel] = F.sub[x[sel], F.mul[factors[:, :, None], prow[:, None, :]]]
        rank[sel] += 1
    return rank


def rank(F, a):
    a = np.asarray(a, dtype=np.int64)
    if a.size == 0:
        return 0
    return int(batch_rank(F, a[None])[0])


def rref(F, a):
    """Reduced row echelon form of a single matrix; returns (R, pivots)."""
    m = np.array(a, dtype=np.int64, copy=True)
    nr, nc = m.shape
    add, mul, sub, inv = F.add_l, F.mul_l, F.sub_l, F.inv_l
    rows = m.tolist()
    pivots = []
    r = 0
    for j in range(nc):
        if r == nr:
            break
        piv = next((i for i in range(r, nr) if rows[i][j]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        s = inv[rows[r][j]]
        rows[r] = [mul[s][x] for x in rows[r]]
        for i in range(nr):
            if i != r and rows[i][j]:
                f = rows[i][j]
                rows[i] = [sub[x][mul[f][y]] for x, y in zip(rows[i], rows[r])]
        pivots.append(j)
        r += 1
    out = np.array(rows, dtype=np.int64).reshape(nr, nc)
    return out, pivots


def solve_affine(F, a, b):
    """All x with a @ x = b (column convention), as (x0, kernel basis rows).

    Returns None when the system is inconsistent.  The kernel basis has shape
    (s, n) so the solution set is {x0 + c @ kernel : c in F^s}.
    """
    a = np.asarray(a, dtype=np.int64)
    nr, nc = a.shape
    aug = np.concatenate([a, np.asarray(b, dtype=np.int64).reshape(nr, 1)], axis=1)
    r, piv = rref(F, aug)
    if nc in piv:
        return None
    x0 = np.zeros(nc, dtype=np.int64)
    for i, j in enumerate(piv):
        x0[j] = r[i, nc]
    free = [j for j in range(nc) if j not in piv]
    kernel = np.zeros((len(free), nc), dtype=np.int64)
    for t, f in enumerate(free):
        kernel[t, f] = 1
        for i, j in enumerate(piv):
            kernel[t, j] = F.neg[r[i, f]]
    return x0, kernel


def nullspace(F, a):
    """Basis (rows) of {x : a @ x = 0}."""
    a = np.asarray(a, dtype=np.int64)
    return solve_affine(F, a, np.zeros(a.shape[0], dtype=np.int64))[1]


def coefficient_grid(q, s):
    """All vectors of F_q^s in base-q order, shape (q^s, s)."""
    if s == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.array(list(itertools.product(range(q), repeat=s)), dtype=np.int64)


def affine_points(F, x0, kernel):
    """Every point of x0 + span(kernel), shape (q^s, n)."""
    s = kernel.shape[0]
    grid = coefficient_grid(F.q, s)
    if s == 0:
        return x0[None, :].copy()
    return F.add[x0[None, :], fmatmul(F, grid, kernel)]


def linear_system(F, fn, in_shape):
    """Matrix of the linear map fn on matrices of shape in_shape.

    Column k is fn applied to the k-th unit matrix, flattened.
    """
    n = int(np.prod(in_shape))
    cols = []
    for k in range(n):
        e = np.zeros(n, dtype=np.int64)
        e[k] = 1
        cols.append(np.asarray(fn(e.reshape(in_shape)), dtype=np.int64).ravel())
    if not cols:
        return np.zeros((0, 0), dtype=np.int64)
    return np.stack(cols, axis=1)


def solve_matrix_equations(F, in_shape, equations):
    """Affine space of matrices X of shape in_shape with fn(X) = target for each pair.

    `equations` is a list of (fn, target) with fn linear.  Returns
    (x0, kernel) in flattened coordinates or None if inconsistent.
    """
    if not equations:
        n = int(np.prod(in_shape))
        return np.zeros(n, dtype=np.int64), identity(n)
    mats, rhs = [], []
    for fn, target in equations:
        mats.append(linear_system(F, fn, in_shape))
        rhs.append(np.asarray(target, dtype=np.int64).ravel())
    a = np.concatenate(mats, axis=0)
    b = np.concatenate(rhs)
    if a.shape[0] == 0:
        n = int(np.prod(in_shape))
        return np.zeros(n, dtype=np.int64), identity(n)
    return solve_affine(F, a, b)


def all_matrices(q, m, n):
    """Every m x n matrix over F_q; only for tiny sizes."""
    grid = coefficient_grid(q, m * n)
    return grid.reshape(q ** (m * n), m, n)
