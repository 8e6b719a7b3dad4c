"""Formal linear combinations of basis labels, and of ordered label pairs."""

from fractions import Fraction

from .partitions import Partition
from .qpoly import QPoly


def _label(x):
    if isinstance(x, (int, Partition)) and not isinstance(x, bool):
        return x
    return Partition(x)


def _label_json(x):
    return x if isinstance(x, int) else list(x)


def _label_text(x):
    return f"[{x}]" if isinstance(x, int) else "[" + ",".join(map(str, x)) + "]"


def _sort_key(x):
    return (0, x, ()) if isinstance(x, int) else (1, 0, tuple(x))


def coeff_json(c):
    if isinstance(c, QPoly):
        return c.to_json()
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def coeff_text(c):
    if isinstance(c, QPoly):
        return f"({c})" if len([x for x in c.coeffs if x]) > 1 else str(c)
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _norm(c):
    if isinstance(c, QPoly):
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


class HallElement:
    """Finitely supported map label -> coefficient; zero coefficients are dropped."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        out = {}
        for k, v in dict(terms or {}).items():
            k = _label(k)
            v = out.get(k, 0) + v
            out[k] = v
        self.terms = {k: _norm(v) for k, v in out.items() if v != 0}

    @classmethod
    def basis(cls, label, coeff=1):
        return cls({_label(label): coeff})

    def __iter__(self):
        return iter(sorted(self.terms, key=_sort_key))

    def items(self):
        return [(k, self.terms[k]) for k in self]

    def coeff(self, label):
        return self.terms.get(_label(label), 0)

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return HallElement(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return HallElement({k: c * v for k, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, HallElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def to_json(self):
        return {"terms": [{"label": _label_json(k), "coeff": coeff_json(v)} for k, v in self.items()]}

    def format(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{coeff_text(v)}·{_label_text(k)}" for k, v in self.items())

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"HallElement({self.format()})"


class TensorElement:
    """Finitely supported map (left label, right label) -> coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        out = {}
        for (a, b), v in dict(terms or {}).items():
            key = (_label(a), _label(b))
            out[key] = out.get(key, 0) + v
        self.terms = {k: _norm(v) for k, v in out.items() if v != 0}

    @classmethod
    def basis(cls, a, b, coeff=1):
        return cls({(a, b): coeff})

    def items(self):
        keys = sorted(self.terms, key=lambda ab: (_sort_key(ab[0]), _sort_key(ab[1])))
        return [(k, self.terms[k]) for k in keys]

    def coeff(self, a, b):
        return self.terms.get((_label(a), _label(b)), 0)

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return TensorElement(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return TensorElement({k: c * v for k, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def to_json(self):
        return {"terms": [{"left": _label_json(a), "right": _label_json(b), "coeff": coeff_json(v)}
                          for (a, b), v in self.items()]}

    def format(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{coeff_text(v)}·{_label_text(a)}⊗{_label_text(b)}"
                          for (a, b), v in self.items())

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"TensorElement({self.format()})"
