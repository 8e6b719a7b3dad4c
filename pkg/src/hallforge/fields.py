"""Finite fields GF(p^e) as lookup tables over integer-encoded elements.

An element is an int in range(q) whose base-p digits are the coefficients of
a polynomial in the generator x, lowest digit first.  The modulus is the
lowest monic irreducible of degree e under that same integer encoding.
"""

from functools import lru_cache

import numpy as np

from .errors import BoundExceeded, InvalidArgument

FIELD_BOUND = 16


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def prime_power(q):
    """Return (p, e) with q = p^e, or raise."""
    if isinstance(q, bool) or not isinstance(q, (int, np.integer)) or q < 2:
        raise InvalidArgument(f"not a prime power: {q!r}")
    q = int(q)
    for p in range(2, q + 1):
        if q % p == 0:
            if not _is_prime(p):
                break
            e, r = 0, q
            while r % p == 0:
                r //= p
                e += 1
            if r != 1:
                break
            return p, e
    raise InvalidArgument(f"not a prime power: {q}")


def is_prime_power(q):
    try:
        prime_power(q)
        return True
    except InvalidArgument:
        return False


def prime_powers(upto=FIELD_BOUND):
    return [q for q in range(2, upto + 1) if is_prime_power(q)]


def _digits(a, p, e):
    out = []
    for _ in range(e):
        out.append(a % p)
        a //= p
    return out


def _undigits(ds, p):
    a = 0
    for d in reversed(ds):
        a = a * p + d
    return a


def _polymulmod(a, b, mod, p):
    """Multiply digit lists a, b modulo the monic digit list mod (length e+1)."""
    e = len(mod) - 1
    prod = [0] * (2 * e)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    for k in range(len(prod) - 1, e - 1, -1):
        c = prod[k]
        if c:
            for i in range(e + 1):
                prod[k - e + i] = (prod[k - e + i] - c * mod[i]) % p
    return prod[:e]


def _is_irreducible(mod, p):
    """True iff the monic polynomial `mod` of degree e is irreducible over F_p (brute force)."""
    e = len(mod) - 1
    # try every monic divisor of degree 1..e//2
    for d in range(1, e // 2 + 1):
        for code in range(p ** d):
            div = _digits(code, p, d) + [1]
            rem = list(mod)
            for k in range(e - d, -1, -1):
                c = rem[k + d]
                if c:
                    for i in range(d + 1):
                        rem[k + i] = (rem[k + i] - c * div[i]) % p
            if not any(rem[:d]):
                return False
    return True


def lowest_irreducible(p, e):
    """Lowest monic irreducible of degree e, as a digit list of length e+1."""
    for code in range(p ** e):
        mod = _digits(code, p, e) + [1]
        if e == 1 or _is_irreducible(mod, p):
            return mod
    raise AssertionError("no irreducible found")


class GF:
    """The field with q elements; arithmetic through precomputed numpy tables."""

    def __init__(self, q, bound=FIELD_BOUND):
        p, e = prime_power(q)
        if q > bound:
            raise BoundExceeded(f"field size {q} exceeds bound {bound}")
        self.q, self.p, self.e = q, p, e
        self.modulus = lowest_irreducible(p, e)
        digits = [_digits(a, p, e) for a in range(q)]
        add = np.empty((q, q), dtype=np.int64)
        mul = np.empty((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(q):
                add[a, b] = _undigits([(x + y) % p for x, y in zip(digits[a], digits[b])], p)
                mul[a, b] = _undigits(_polymulmod(digits[a], digits[b], self.modulus, p), p)
        self.add = add
        self.mul = mul
        self.neg = np.array([int(np.nonzero(add[a] == 0)[0][0]) for a in range(q)], dtype=np.int64)
        self.sub = add[:, self.neg]
        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            hits = np.nonzero(mul[a] == 1)[0]
            if len(hits) != 1:
                raise AssertionError(f"GF({q}) table broken: {a} has no unique inverse")
            inv[a] = hits[0]
        self.inv = inv
        for t in (self.add, self.mul, self.sub, self.neg, self.inv):
            t.setflags(write=False)
        # plain-list copies for scalar loops, where numpy indexing is slow
        self.add_l = add.tolist()
        self.mul_l = mul.tolist()
        self.sub_l = self.sub.tolist()
        self.inv_l = inv.tolist()

    def check_tables(self):
        """Exhaustive field-axiom check; cheap for q <= 16."""
        q, add, mul = self.q, self.add, self.mul
        r = np.arange(q)
        assert (add[0] == r).all() and (mul[1] == r).all()
        assert (add == add.T).all() and (mul == mul.T).all()
        a, b, c = np.meshgrid(r, r, r, indexing="ij")
        assert (add[add[a, b], c] == add[a, add[b, c]]).all()
        assert (mul[mul[a, b], c] == mul[a, mul[b, c]]).all()
        assert (mul[a, add[b, c]] == add[mul[a, b], mul[a, c]]).all()
        assert all(mul[x, self.inv[x]] == 1 for x in range(1, q))
        return True

    def __eq__(self, other):
        return isinstance(other, GF) and other.q == self.q

    def __hash__(self):
        return hash(("GF", self.q))

    def __repr__(self):
        return f"GF({self.q})"


@lru_cache(maxsize=None)
def field(q):
    return GF(q)
