"""Symmetric functions on the monomial and elementary bases.

Products of monomial symmetric functions are read off from honest polynomial
multiplication in as many variables as the total degree, which is enough
variables for every monomial of that degree to appear.
"""

from functools import lru_cache

from .errors import BoundExceeded, ConsistencyError, InvalidArgument
from .f1 import count_zero_one_matrices, elementary_product_expansion
from .partitions import Partition, distinct_permutations, ones, partitions_of
from .qpoly import QPoly
from .zelevinsky import b_polynomial

PRODUCT_BOUND = 12
ELEMENTARY_BOUND = 10


def _coeff_json(c):
    return c.to_json() if isinstance(c, QPoly) else QPoly((c,)).to_json()


class SymFunc:
    """Finite combination of m_lam (basis 'm') or e_lam (basis 'e')."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis, terms=None):
        if basis not in ("m", "e"):
            raise InvalidArgument(f"unknown basis {basis!r}")
        out = {}
        for k, v in dict(terms or {}).items():
            k = Partition(k)
            out[k] = out.get(k, 0) + v
        self.basis = basis
        self.terms = {k: v for k, v in out.items() if v != 0}

    @classmethod
    def m(cls, lam, coeff=1):
        return cls("m", {Partition(lam): coeff})

    @classmethod
    def e(cls, lam, coeff=1):
        return cls("e", {Partition(lam): coeff})

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0].size, tuple(kv[0])), reverse=True)

    def coeff(self, lam):
        return self.terms.get(Partition(lam), 0)

    def __add__(self, other):
        if other.basis != self.basis:
            raise InvalidArgument("cannot add across bases")
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return SymFunc(self.basis, out)

    def scale(self, c):
        return SymFunc(self.basis, {k: c * v for k, v in self.terms.items()})

    def specialize(self, t):
        """Evaluate polynomial coefficients at t."""
        return SymFunc(self.basis, {k: (v(t) if isinstance(v, QPoly) else v) for k, v in self.terms.items()})

    def degrees(self):
        return sorted({k.size for k in self.terms})

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.basis == other.basis and self.terms == other.terms

    def __hash__(self):
        return hash((self.basis, frozenset(self.terms.items())))

    def to_json(self):
        return {"basis": self.basis,
                "terms": [{"part": list(k), "coeff": _coeff_json(v)} for k, v in self.items()]}

    @classmethod
    def from_json(cls, data):
        return cls(data["basis"], {Partition(t["part"]): QPoly.from_json(t["coeff"]) for t in data["terms"]})

    def format(self):
        if not self.terms:
            return "0"
        parts = []
        for k, v in self.items():
            if isinstance(v, QPoly):
                c = v.format("t")
                c = f"({c})" if len([x for x in v if x]) > 1 else c
            else:
                c = str(v)
            parts.append(f"{c}·{self.basis}{list(k)}")
        return " + ".join(parts)

    def __repr__(self):
        return f"SymFunc({self.format()})"


def _padded(lam, n):
    return tuple(lam) + (0,) * (n - len(lam))


@lru_cache(maxsize=None)
def monomial_product(lam, mu, bound=PRODUCT_BOUND):
    """m_lam * m_mu in the monomial basis, via exponent vectors in |lam|+|mu| variables."""
    lam, mu = Partition(lam), Partition(mu)
    n = lam.size + mu.size
    if n > bound:
        raise BoundExceeded(f"degree {n} exceeds product bound {bound}")
    mu_sorted = tuple(sorted(_padded(mu, n)))
    lam_terms = list(distinct_permutations(_padded(lam, n)))
    out = {}
    for nu in partitions_of(n):
        target = _padded(nu, n)
        # coefficient of x^nu: exponent vectors a of m_lam with nu - a an exponent vector of m_mu
        c = 0
        for a in lam_terms:
            b = tuple(x - y for x, y in zip(target, a))
            if all(v >= 0 for v in b) and tuple(sorted(b)) == mu_sorted:
                c += 1
        if c:
            out[nu] = c
    return SymFunc("m", out)


def multiply_m(f, g):
    """Product of two monomial-basis symmetric functions."""
    out = SymFunc("m")
    for lam, x in f.terms.items():
        for mu, y in g.terms.items():
            out = out + monomial_product(lam, mu).scale(x * y)
    return out


def elementary_to_monomial_by_products(lam):
    """e_lam = prod e_r with e_r = m_(1^r), multiplied out as polynomials."""
    out = SymFunc.m(Partition())
    for r in Partition(lam):
        out = multiply_m(out, SymFunc.m(ones(r)))
    return out


@lru_cache(maxsize=None)
def elementary_to_monomial(lam, bound=ELEMENTARY_BOUND, cross_check=True):
    """e_lam in the m basis with coefficients counted as 0/1 matrices."""
    lam = Partition(lam)
    if lam.size > bound:
        raise BoundExceeded(f"|lambda| = {lam.size} exceeds bound {bound}")
    counted = SymFunc("m", {mu: count_zero_one_matrices(lam, mu) for mu in partitions_of(lam.size)})
    if cross_check and lam.size <= PRODUCT_BOUND:
        multiplied = elementary_to_monomial_by_products(lam)
        if multiplied != counted:
            raise ConsistencyError(f"e_{list(lam)}: matrix counts {counted} vs products {multiplied}")
    return counted


# exact matrix inversion over an integral domain

def _exact_div(a, b):
    if isinstance(a, QPoly) or isinstance(b, QPoly):
        return QPoly.coerce(a).exact_div(QPoly.coerce(b))
    if a % b:
        raise ArithmeticError(f"{a} not divisible by {b}")
    return a // b


def fraction_free_inverse(matrix, zero=0, one=1):
    """(det, adjugate) by fraction-free Gauss-Jordan elimination.

    Every division is exact over the coefficient ring; the caller decides
    whether det is a unit.
    """
    n = len(matrix)
    m = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(matrix)]
    prev = one
    sign = 1
    for k in range(n):
        piv = next((r for r in range(k, n) if m[r][k] != 0), None)
        if piv is None:
            return zero, None
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        pk = m[k][k]
        for i in range(n):
            if i == k:
                continue
            f = m[i][k]
            m[i] = [_exact_div(pk * m[i][j] - f * m[k][j], prev) for j in range(2 * n)]
        prev = pk
    det = prev if sign == 1 else prev * -1
    adj = [[x if sign == 1 else x * -1 for x in row[n:]] for row in m]
    return det, adj


def determinant(matrix):
    if not matrix:
        return 1
    return fraction_free_inverse(matrix)[0]


def unimodular_inverse(matrix, zero=0, one=1):
    """Inverse of a matrix whose determinant is +-1; raises otherwise."""
    if not matrix:
        return []
    det, adj = fraction_free_inverse(matrix, zero, one)
    if det == one:
        return adj
    if det == one * -1:
        return [[x * -1 for x in row] for row in adj]
    raise ArithmeticError(f"determinant {det} is not a unit")


def a_tilde_matrix(n):
    """Rows and columns over P_n in descending lex order; entry a_{lam' mu}."""
    parts = partitions_of(n)
    return parts, [[count_zero_one_matrices(lam.conjugate(), mu) for mu in parts] for lam in parts]


@lru_cache(maxsize=None)
def phi_image(lam):
    """phi(u_lam): write u_lam through products of u_(1^r), send u_(1^r) to e_r, expand in m.

    The Hall side comes from counting invariant subsets; the e -> m side from
    polynomial multiplication.  The result must be m_lam.
    """
    lam = Partition(lam)
    if lam.size > 8:
        raise BoundExceeded("phi_image is bounded to |lambda| <= 8")
    parts = partitions_of(lam.size)
    # E_mu = u_(1^mu1) u_(1^mu2) ... = sum_nu a_{mu nu} u_nu
    a = [[elementary_product_expansion(mu).coeff(nu) for nu in parts] for mu in parts]
    c = unimodular_inverse(a)
    row = c[parts.index(lam)]
    out = SymFunc("m")
    for coef, mu in zip(row, parts):
        if coef:
            out = out + elementary_to_monomial_by_products(mu).scale(coef)
    if out != SymFunc.m(lam):
        raise ConsistencyError(f"phi(u_{list(lam)}) = {out.format()}, expected m_{list(lam)}")
    return out


@lru_cache(maxsize=None)
def b_matrix(n):
    parts = partitions_of(n)
    return parts, [[b_polynomial(mu, nu, check_shapes=False) for nu in parts] for mu in parts]


@lru_cache(maxsize=None)
def hall_littlewood_image(lam):
    """psi(u_lam) in the m basis, coefficients integer polynomials in t.

    Products of u_(1^r) expand with the b polynomials; the inverse of that
    matrix must be integral, and at t = 1 the image must be m_lam.
    """
    lam = Partition(lam)
    if lam.size > 6:
        raise BoundExceeded("hall_littlewood_image is bounded to |lambda| <= 6")
    parts, b = b_matrix(lam.size)
    inv = unimodular_inverse(b, zero=QPoly(), one=QPoly((1,)))
    row = inv[parts.index(lam)]
    out = SymFunc("m")
    for coef, mu in zip(row, parts):
        if coef:
            e_mu = elementary_to_monomial(mu)
            out = out + SymFunc("m", {nu: coef * QPoly((c,)) for nu, c in e_mu.terms.items()})
    if out.specialize(1) != SymFunc.m(lam):
        raise ConsistencyError(f"psi(u_{list(lam)}) at t=1 is {out.specialize(1).format()}")
    return out
