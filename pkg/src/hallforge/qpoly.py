"""Exact integer polynomials in q, rational functions, and q-analogs."""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import gcd

from .errors import BoundExceeded, InterpolationError, InvalidArgument


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class QPoly:
    """Univariate polynomial with integer coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, int):
            coeffs = (coeffs,)
        coeffs = _strip(coeffs)
        for c in coeffs:
            if not isinstance(c, int):
                if isinstance(c, Fraction) and c.denominator == 1:
                    continue
                raise InvalidArgument(f"QPoly coefficients must be integers, got {c!r}")
        self.coeffs = tuple(int(c) for c in coeffs)

    @classmethod
    def monomial(cls, k, c=1):
        return cls((0,) * k + (c,))

    @classmethod
    def coerce(cls, x):
        if isinstance(x, QPoly):
            return x
        if isinstance(x, int):
            return cls((x,))
        if isinstance(x, Fraction) and x.denominator == 1:
            return cls((int(x),))
        raise TypeError(f"cannot coerce {x!r} to QPoly")

    @property
    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _strip((other,))
        return NotImplemented

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash(self.coeffs)

    def __add__(self, other):
        try:
            other = QPoly.coerce(other)
        except TypeError:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return QPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return QPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        try:
            other = QPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, QRational):
            return NotImplemented
        try:
            other = QPoly.coerce(other)
        except TypeError:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return QPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise InvalidArgument("negative power of a polynomial")
        out = QPoly((1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def divmod_exact(self, other):
        """Quotient and remainder over Z; raises if a step needs a fraction."""
        other = QPoly.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        quo = [0] * max(len(rem) - len(other.coeffs) + 1, 0)
        lead = other.leading()
        for k in range(len(rem) - len(other.coeffs), -1, -1):
            c = rem[k + len(other.coeffs) - 1]
            if c == 0:
                continue
            if c % lead:
                raise ArithmeticError(f"{self} is not divisible by {other} over Z")
            f = c // lead
            quo[k] = f
            for i, b in enumerate(other.coeffs):
                rem[k + i] -= f * b
        return QPoly(quo), QPoly(rem)

    def exact_div(self, other):
        quo, rem = self.divmod_exact(other)
        if rem:
            raise ArithmeticError(f"{self} is not divisible by {other}")
        return quo

    def __floordiv__(self, other):
        return self.exact_div(other)

    def __call__(self, x):
        """Evaluate by Horner's rule at an int, Fraction, or QPoly."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def evaluate(self, x):
        return self(x)

    def shift(self, k):
        """Multiply by q^k."""
        return QPoly((0,) * k + self.coeffs) if self.coeffs else QPoly()

    def content(self):
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def to_json(self):
        return list(self.coeffs)

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, list) or not all(isinstance(c, int) and not isinstance(c, bool) for c in data):
            raise InvalidArgument(f"QPoly JSON must be an integer array: {data!r}")
        if data and data[-1] == 0:
            raise InvalidArgument("QPoly JSON must not carry trailing zeros")
        return cls(data)

    def format(self, var="q"):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = var if k == 1 else f"{var}^{k}"
                body = power if mag == 1 else f"{mag}*{power}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.format("q")

    def __repr__(self):
        return f"QPoly({list(self.coeffs)})"


Q = QPoly((0, 1))
ONE = QPoly((1,))
ZERO = QPoly()


# Polynomial arithmetic over Q, only used to reduce rational functions.

def _frac_strip(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _frac_divmod(a, b):
    a = _frac_strip(a)
    b = _frac_strip(b)
    quo = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    rem = list(a)
    for k in range(len(a) - len(b), -1, -1):
        f = Fraction(rem[k + len(b) - 1]) / b[-1]
        quo[k] = f
        if f:
            for i, x in enumerate(b):
                rem[k + i] -= f * x
    return _frac_strip(quo), _frac_strip(rem)


def _frac_gcd(a, b):
    a, b = _frac_strip(a), _frac_strip(b)
    while b:
        _, r = _frac_divmod(a, b)
        a, b = b, r
    return a


def _primitive(coeffs):
    """Scale rational coefficients to a primitive integer vector (sign kept)."""
    coeffs = [Fraction(c) for c in coeffs]
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return [c // g for c in ints] if g else ints


class QRational:
    """Reduced quotient num/den of integer polynomials.

    Canonical form: gcd(num, den) is constant, den has positive leading
    coefficient, and the integer contents of num and den are coprime.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        num = QPoly.coerce(num) if not isinstance(num, QPoly) else num
        den = QPoly.coerce(den) if not isinstance(den, QPoly) else den
        if den.is_zero():
            raise ZeroDivisionError("QRational with zero denominator")
        if num.is_zero():
            self.num, self.den = ZERO, ONE
            return
        g = _frac_gcd(num.coeffs, den.coeffs)
        if len(g) > 1:
            num_c, r1 = _frac_divmod(num.coeffs, g)
            den_c, r2 = _frac_divmod(den.coeffs, g)
            assert not r1 and not r2
        else:
            num_c, den_c = list(num.coeffs), list(den.coeffs)
        # common integer scaling: clear denominators jointly, then drop the joint content
        both = _primitive(list(num_c) + list(den_c))
        num_i, den_i = both[: len(num_c)], both[len(num_c):]
        if den_i[-1] < 0:
            num_i = [-c for c in num_i]
            den_i = [-c for c in den_i]
        self.num, self.den = QPoly(num_i), QPoly(den_i)

    @classmethod
    def coerce(cls, x):
        if isinstance(x, QRational):
            return x
        if isinstance(x, Fraction):
            return cls(QPoly((x.numerator,)), QPoly((x.denominator,)))
        return cls(QPoly.coerce(x))

    @classmethod
    def q_power(cls, k):
        """q^k for any integer k."""
        return cls(QPoly.monomial(k)) if k >= 0 else cls(ONE, QPoly.monomial(-k))

    def is_polynomial(self):
        return self.den.degree == 0 and self.den.coeffs[0] == 1

    def as_poly(self):
        if not self.is_polynomial():
            raise ArithmeticError(f"{self} is not an integer polynomial")
        return self.num

    def __eq__(self, other):
        try:
            other = QRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num.coeffs, self.den.coeffs))

    def __add__(self, other):
        try:
            other = QRational.coerce(other)
        except TypeError:
            return NotImplemented
        return QRational(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return QRational(-self.num, self.den)

    def __sub__(self, other):
        return self + (-QRational.coerce(other))

    def __rsub__(self, other):
        return QRational.coerce(other) - self

    def __mul__(self, other):
        try:
            other = QRational.coerce(other)
        except TypeError:
            return NotImplemented
        return QRational(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = QRational.coerce(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return QRational(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return QRational.coerce(other) / self

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at {x}")
        return Fraction(self.num(x)) / d

    def is_zero(self):
        return self.num.is_zero()

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data):
        return cls(QPoly.from_json(data["num"]), QPoly.from_json(data["den"]))

    def format(self, var="q"):
        if self.is_polynomial():
            return self.num.format(var)
        return f"({self.num.format(var)})/({self.den.format(var)})"

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"QRational({list(self.num.coeffs)}, {list(self.den.coeffs)})"


# q-analogs

def q_int(n):
    """[n]_q = 1 + q + ... + q^(n-1); [0]_q = 0."""
    if n < 0:
        raise InvalidArgument("q_int needs n >= 0")
    return QPoly((1,) * n)


@lru_cache(maxsize=None)
def q_factorial(n):
    if n < 0:
        raise InvalidArgument("q_factorial needs n >= 0")
    out = ONE
    for k in range(1, n + 1):
        out = out * q_int(k)
    return out


@lru_cache(maxsize=None)
def q_binomial(n, m):
    """Gaussian binomial [n choose m]_q by exact division of q-factorials."""
    if n < 0 or m < 0 or m > n:
        raise InvalidArgument(f"q_binomial needs 0 <= m <= n, got ({n}, {m})")
    return q_factorial(n).exact_div(q_factorial(m) * q_factorial(n - m))


def inversions(perm):
    return sum(1 for i, j in combinations(range(len(perm)), 2) if perm[i] > perm[j])


def inversion_partition_function(n, bound=9):
    """Sum of q^inv(sigma) over all permutations of n letters."""
    if n > bound:
        raise BoundExceeded(f"inversion enumeration of S_{n} exceeds bound {bound}")
    counts = {}
    for perm in permutations(range(n)):
        k = inversions(perm)
        counts[k] = counts.get(k, 0) + 1
    return QPoly(counts.get(k, 0) for k in range(max(counts) + 1))


def lattice_path_area(subset, m, n):
    """Area above the path of `subset` inside the n-by-m rectangle.

    Step i goes north if i is in the subset and east otherwise; the area above
    the path counts, for each north step, the east steps still to come.
    """
    area = 0
    east_done = 0
    for i in range(1, n + m + 1):
        if i in subset:
            area += n - east_done
        else:
            east_done += 1
    return area


def lattice_area_partition_function(m, n, bound=24):
    """Sum of q^a(K) over m-subsets K of {1..n+m}."""
    if n + m > bound:
        raise BoundExceeded(f"lattice path enumeration with n+m={n + m} exceeds bound {bound}")
    counts = {}
    for subset in combinations(range(1, n + m + 1), m):
        k = lattice_path_area(set(subset), m, n)
        counts[k] = counts.get(k, 0) + 1
    return QPoly(counts.get(k, 0) for k in range(max(counts) + 1))


def interpolate_integer_poly(samples, degree_bound):
    """Unique integer polynomial of degree <= degree_bound through the samples.

    The first degree_bound + 1 samples determine the interpolant; every later
    sample is a held-out check.  A negative bound means the zero polynomial.
    """
    samples = [(int(x), Fraction(y)) for x, y in samples]
    xs = [x for x, _ in samples]
    if len(set(xs)) != len(xs):
        raise InvalidArgument("sample points must be pairwise distinct")
    need = max(degree_bound + 1, 0)
    if len(samples) < max(need, 1):
        raise InterpolationError(
            f"{len(samples)} samples cannot determine a polynomial of degree <= {degree_bound}")
    fit, check = samples[:need], samples[need:]

    # Newton divided differences over Q
    coef = [y for _, y in fit]
    pts = [x for x, _ in fit]
    for level in range(1, need):
        for i in range(need - 1, level - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (pts[i] - pts[i - level])
    poly = [Fraction(0)]
    for i in range(need - 1, -1, -1):
        # poly = poly * (x - pts[i]) + coef[i]
        shifted = [Fraction(0)] + poly
        for k, c in enumerate(poly):
            shifted[k] -= pts[i] * c
        shifted[0] += coef[i]
        poly = shifted
    if any(c.denominator != 1 for c in poly):
        raise InterpolationError(f"interpolant has non-integer coefficients: {poly}")
    result = QPoly(int(c) for c in poly)
    for x, y in check:
        if result(x) != y:
            raise InterpolationError(
                f"held-out sample at {x} is {y}, interpolant {result} gives {result(x)}")
    return result
