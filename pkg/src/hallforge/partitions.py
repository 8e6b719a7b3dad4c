"""Integer partitions and compositions: orders, statistics, enumeration."""

from functools import lru_cache
from itertools import accumulate, zip_longest
from math import comb

from .errors import BoundExceeded, InvalidArgument

PARTITION_BOUND = 40


class Partition(tuple):
    """Weakly decreasing tuple of positive integers; trailing zeros are dropped.

    Tuple comparison on partitions of the same size is the lexicographic order.
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        if isinstance(parts, Partition):
            return parts
        if isinstance(parts, int):
            parts = (parts,)
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if b > a:
                raise InvalidArgument(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise InvalidArgument(f"parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts):
        """Sort arbitrary nonnegative parts into a partition."""
        return cls(sorted((p for p in parts if p), reverse=True))

    @property
    def size(self):
        return sum(self)

    @property
    def length(self):
        return len(self)

    def part(self, i):
        """1-based part, zero beyond the length."""
        return self[i - 1] if 0 < i <= len(self) else 0

    def conjugate(self):
        return conjugate(self)

    def __repr__(self):
        return f"Partition({list(self)})"


class Composition(tuple):
    """Finite sequence of nonnegative integers, stored as given.

    Equality and hashing ignore trailing zeros.
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise InvalidArgument(f"composition parts must be nonnegative: {parts}")
        return super().__new__(cls, parts)

    def stripped(self):
        parts = tuple(self)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        return parts

    def __eq__(self, other):
        if isinstance(other, tuple):
            other = Composition(other).stripped()
            return self.stripped() == other
        return NotImplemented

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash(("Composition", self.stripped()))

    @property
    def size(self):
        return sum(self)

    def sorted_partition(self):
        return Partition.from_parts(self)

    def __repr__(self):
        return f"Composition({list(self)})"


def conjugate(lam):
    lam = Partition(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def _padded_prefix_sums(a, b):
    pa = accumulate(x for x, _ in zip_longest(a, b, fillvalue=0))
    pb = accumulate(y for _, y in zip_longest(a, b, fillvalue=0))
    return zip(pa, pb)


def dominance_leq(mu, lam):
    """mu <= lam in dominance order; False when the sizes differ.

    Works for arbitrary nonnegative sequences as well as partitions.
    """
    if sum(mu) != sum(lam):
        return False
    return all(x <= y for x, y in _padded_prefix_sums(mu, lam))


def lex_leq(mu, lam):
    for x, y in zip_longest(mu, lam, fillvalue=0):
        if x != y:
            return x < y
    return True


def n_stat(lam):
    """n(lam) = sum (i-1) lam_i."""
    return sum(i * p for i, p in enumerate(lam))


def n_stat_from_conjugate(lam):
    return sum(comb(c, 2) for c in conjugate(lam))


def contains(big, small):
    """Young diagram containment small ⊆ big."""
    return len(small) <= len(big) and all(s <= b for s, b in zip(small, big))


def ones(r):
    """The partition (1^r)."""
    return Partition((1,) * r)


def union(mu, nu):
    """Partition whose parts are the parts of mu and nu together."""
    return Partition.from_parts(tuple(mu) + tuple(nu))


@lru_cache(maxsize=None)
def _partitions_bounded(n, largest):
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n, bound=PARTITION_BOUND):
    """All partitions of n in descending lexicographic order."""
    if n < 0:
        raise InvalidArgument("n must be nonnegative")
    if n > bound:
        raise BoundExceeded(f"partitions_of({n}) exceeds bound {bound}")
    return [Partition(p) for p in _partitions_bounded(n, n)]


def partitions_up_to(n, bound=PARTITION_BOUND):
    return [lam for k in range(n + 1) for lam in partitions_of(k, bound)]


def partitions_with_max_part(n, largest):
    return [Partition(p) for p in _partitions_bounded(n, min(n, largest))]


def distinct_permutations(seq):
    """Distinct rearrangements of seq, in lexicographic order of positions taken."""
    counts = {}
    for x in seq:
        counts[x] = counts.get(x, 0) + 1
    keys = sorted(counts)
    n = len(seq)

    def rec(prefix):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                prefix.append(k)
                yield from rec(prefix)
                prefix.pop()
                counts[k] += 1

    yield from rec([])


def parse_partition(text):
    """Parse '3,2,1' (or '' for the empty partition); rejects unsorted input."""
    text = text.strip()
    if text in ("", "()", "[]", "0"):
        return Partition()
    try:
        parts = [int(x) for x in text.strip("()[]").split(",") if x.strip()]
    except ValueError:
        raise InvalidArgument(f"not a partition: {text!r}") from None
    if any(p <= 0 for p in parts):
        raise InvalidArgument(f"parts must be positive: {text!r}")
    return Partition(parts)
