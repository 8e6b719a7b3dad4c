"""Finite groupoids with explicit morphisms, functors, 2-pullbacks and spans.

Composition is written in diagram order: ``A.then(f, g)`` is "f, then g" for
f: x -> y and g: y -> z.  A right action k.g of a group on a set gives the
action groupoid with morphisms (k, g): k -> k.g.
"""

import random
from collections import deque
from fractions import Fraction
from itertools import islice

from .errors import BoundExceeded, ConsistencyError, InvalidArgument

ASSOCIATIVITY_BOUND = 2000
PAIR_SAMPLE = 20000
CERTIFICATE_BOUND = 200


class FiniteGroupoid:
    """Objects, morphisms with endpoints, and composition/identity/inverse rules.

    ``morphisms`` is an iterable of (key, source, target); ``compose``,
    ``identity`` and ``inverse`` are callables on keys and objects.
    """

    def __init__(self, objects, morphisms, compose, identity, inverse, name=None, validate=True):
        self.objects = tuple(objects)
        if len(set(self.objects)) != len(self.objects):
            raise InvalidArgument("object labels must be distinct")
        self._index = {x: i for i, x in enumerate(self.objects)}
        self._src, self._tgt = {}, {}
        self._out = {x: [] for x in self.objects}
        self._hom = {}
        for key, s, t in morphisms:
            if key in self._src:
                raise InvalidArgument(f"duplicate morphism {key!r}")
            if s not in self._index or t not in self._index:
                raise InvalidArgument(f"morphism {key!r} has an endpoint outside the object set")
            self._src[key], self._tgt[key] = s, t
            self._out[s].append(key)
            self._hom.setdefault((s, t), []).append(key)
        self._compose, self._identity, self._inverse = compose, identity, inverse
        self.name = name
        self._classes = None
        if validate:
            self.validate()

    # basic access

    def __len__(self):
        return len(self.objects)

    @property
    def n_morphisms(self):
        return len(self._src)

    def morphisms(self):
        return list(self._src)

    def src(self, f):
        return self._src[f]

    def tgt(self, f):
        return self._tgt[f]

    def out(self, x):
        return self._out[x]

    def hom(self, x, y):
        return self._hom.get((x, y), [])

    def aut(self, x):
        return self.hom(x, x)

    def identity(self, x):
        return self._identity(x)

    def inverse(self, f):
        return self._inverse(f)

    def then(self, f, g):
        if self._tgt[f] != self._src[g]:
            raise InvalidArgument(f"{f!r} and {g!r} are not composable")
        return self._compose(f, g)

    def index(self, x):
        return self._index[x]

    # validation

    def validate(self, rng=None):
        for x in self.objects:
            e = self._identity(x)
            if self._src.get(e) != x or self._tgt.get(e) != x:
                raise ConsistencyError(f"identity of {x!r} is missing or has wrong endpoints")
        for f, s in self._src.items():
            t = self._tgt[f]
            if self._compose(self._identity(s), f) != f or self._compose(f, self._identity(t)) != f:
                raise ConsistencyError(f"identity law fails at {f!r}")
            g = self._inverse(f)
            if self._src.get(g) != t or self._tgt.get(g) != s:
                raise ConsistencyError(f"inverse of {f!r} has wrong endpoints")
            if self._compose(f, g) != self._identity(s) or self._compose(g, f) != self._identity(t):
                raise ConsistencyError(f"{f!r} is not inverted by {g!r}")
        for f, g in self._composable_pairs(rng):
            h = self._compose(f, g)
            if self._src.get(h) != self._src[f] or self._tgt.get(h) != self._tgt[g]:
                raise ConsistencyError(f"composite of {f!r}, {g!r} has wrong endpoints")
        for f, g, h in self._composable_triples(rng):
            if self._compose(self._compose(f, g), h) != self._compose(f, self._compose(g, h)):
                raise ConsistencyError(f"composition is not associative at {f!r}, {g!r}, {h!r}")
        return True

    def _composable_pairs(self, rng=None):
        total = sum(len(self._out[self._tgt[f]]) for f in self._src)
        if total <= PAIR_SAMPLE:
            return [(f, g) for f in self._src for g in self._out[self._tgt[f]]]
        rng = rng or random.Random(0)
        keys = list(self._src)
        out = []
        for _ in range(PAIR_SAMPLE):
            f = rng.choice(keys)
            out.append((f, rng.choice(self._out[self._tgt[f]])))
        return out

    def _composable_triples(self, rng=None):
        if self.n_morphisms <= ASSOCIATIVITY_BOUND:
            pairs = self._composable_pairs()
            if len(pairs) * max((len(v) for v in self._out.values()), default=0) <= 10 * PAIR_SAMPLE:
                return [(f, g, h) for f, g in pairs for h in self._out[self._tgt[g]]]
        rng = rng or random.Random(1)
        out = []
        for f, g in islice(self._composable_pairs(rng), PAIR_SAMPLE // 4):
            out.append((f, g, rng.choice(self._out[self._tgt[g]])))
        return out

    # isomorphism classes

    def _components(self):
        if self._classes is None:
            rep_of, reps = {}, []
            for x in self.objects:
                if x in rep_of:
                    continue
                reps.append(x)
                rep_of[x] = (x, self._identity(x))
                queue = deque([x])
                while queue:
                    y = queue.popleft()
                    via = rep_of[y][1]
                    for f in self._out[y]:
                        z = self._tgt[f]
                        if z not in rep_of:
                            rep_of[z] = (x, self._compose(via, f))
                            queue.append(z)
            self._classes = (reps, rep_of)
        return self._classes

    def class_representatives(self):
        """One object per isomorphism class, in order of first appearance."""
        return list(self._components()[0])

    def representative(self, x):
        """(rep, morphism rep -> x) for the class of x."""
        return self._components()[1][x]

    def class_of(self, x):
        return self.representative(x)[0]

    def isomorphic(self, x, y):
        return self.class_of(x) == self.class_of(y)

    def aut_order(self, x):
        return len(self.aut(x))

    def profile(self):
        """Sorted automorphism orders, one per isomorphism class."""
        return sorted(self.aut_order(r) for r in self.class_representatives())

    def cardinality(self):
        return sum((Fraction(1, self.aut_order(r)) for r in self.class_representatives()), Fraction(0))

    def to_json(self, bound=CERTIFICATE_BOUND):
        """Morphism table: objects, morphisms as [source, target], composition as [i, j, k]."""
        if self.n_morphisms > bound:
            raise BoundExceeded(f"{self.n_morphisms} morphisms exceed the serialization bound {bound}")
        keys = sorted(self._src, key=lambda f: (self._index[self._src[f]], self._index[self._tgt[f]], repr(f)))
        pos = {f: i for i, f in enumerate(keys)}
        return {
            "objects": [repr(x) for x in self.objects],
            "morphisms": [[self._index[self._src[f]], self._index[self._tgt[f]]] for f in keys],
            "identities": [pos[self._identity(x)] for x in self.objects],
            "compose": [[pos[f], pos[g], pos[self._compose(f, g)]]
                        for f in keys for g in self._out[self._tgt[f]]],
        }

    def __repr__(self):
        label = f"{self.name}: " if self.name else ""
        return f"FiniteGroupoid({label}{len(self.objects)} objects, {self.n_morphisms} morphisms)"


def discrete_groupoid(objects):
    objects = list(objects)
    return FiniteGroupoid(objects, [(("id", x), x, x) for x in objects],
                          compose=lambda f, g: f, identity=lambda x: ("id", x),
                          inverse=lambda f: f, name="discrete")


def point_groupoid():
    return discrete_groupoid(["*"])


def generic_action_groupoid(objects, group_of, act, mul, name=None, validate=True):
    """Objects x with a group group_of(x) acting on the right; morphisms (x, g): x -> act(x, g).

    ``mul(g, h)`` is "g, then h".  Each group is given as a list whose
    first element must be its identity.
    """
    objects = list(objects)
    morphisms, inv = [], {}
    for x in objects:
        group = group_of(x)
        e = group[0]
        for g in group:
            morphisms.append(((x, g), x, act(x, g)))
        key = id(group)
        if key not in inv:
            table = {}
            for g in group:
                if mul(e, g) != g or mul(g, e) != g:
                    raise InvalidArgument("the first group element is not the identity")
                h = next((h for h in group if mul(g, h) == e), None)
                if h is None:
                    raise InvalidArgument("invalid action: group is not closed under inverses")
                table[g] = h
            inv[key] = table
    identity = {x: group_of(x)[0] for x in objects}
    inverses = {x: inv[id(group_of(x))] for x in objects}

    def compose(f, g):
        return (f[0], mul(f[1], g[1]))

    def inverse(f):
        return (act(*f), inverses[f[0]][f[1]])

    return FiniteGroupoid(objects, morphisms, compose, lambda x: (x, identity[x]), inverse,
                          name=name, validate=validate)


def _perm_then(g, h):
    return tuple(h[i] for i in g)


def action_groupoid(K, G):
    """K // G for a permutation group G on the finite set K.

    Each element of G is a dict k -> k.g or a sequence of images aligned
    with K.  The action is checked: bijections, identity present, closed
    under composition.
    """
    K = list(K)
    index = {k: i for i, k in enumerate(K)}
    if len(index) != len(K):
        raise InvalidArgument("invalid action: repeated elements of K")
    perms = []
    for g in G:
        images = [g[k] for k in K] if isinstance(g, dict) else list(g)
        if len(images) != len(K) or any(y not in index for y in images):
            raise InvalidArgument("invalid action: an element does not map K into K")
        p = tuple(index[y] for y in images)
        if len(set(p)) != len(p):
            raise InvalidArgument("invalid action: an element does not act bijectively")
        perms.append(p)
    e = tuple(range(len(K)))
    group = sorted(set(perms), key=lambda p: (p != e, p))
    if not group or group[0] != e:
        raise InvalidArgument("invalid action: the identity is missing")
    members = set(group)
    for g in group:
        for h in group:
            if _perm_then(g, h) not in members:
                raise InvalidArgument("invalid action: the group is not closed under composition")
    return generic_action_groupoid(K, lambda k: group, lambda k, g: K[g[index[k]]], _perm_then,
                                   name="action")


def cyclic_group(n):
    """Rotations of range(n), as image tuples."""
    return [tuple((i + s) % n for i in range(n)) for s in range(n)]


def classifying_groupoid(G):
    """One object whose automorphisms are the permutations in G."""
    G = [tuple(g) for g in G]
    e = tuple(range(len(G[0]))) if G else ()
    group = sorted(set(G) | {e}, key=lambda p: (p != e, p))
    return generic_action_groupoid(["*"], lambda x: group, lambda x, g: x, _perm_then, name="BG")


class Functor:
    """Object and morphism maps (dicts or callables) between finite groupoids."""

    def __init__(self, source, target, on_objects, on_morphisms, validate=True):
        self.source, self.target = source, target
        self._obj = on_objects if callable(on_objects) else on_objects.__getitem__
        self._mor = on_morphisms if callable(on_morphisms) else on_morphisms.__getitem__
        self._obj_cache, self._mor_cache = {}, {}
        if validate:
            self.validate()

    def obj(self, x):
        y = self._obj_cache.get(x)
        if y is None:
            y = self._obj_cache[x] = self._obj(x)
        return y

    def mor(self, f):
        g = self._mor_cache.get(f)
        if g is None:
            g = self._mor_cache[f] = self._mor(f)
        return g

    def __call__(self, x):
        return self.obj(x)

    def validate(self, rng=None):
        A, B = self.source, self.target
        for x in A.objects:
            if self.obj(x) not in B._index:
                raise ConsistencyError(f"object {x!r} maps outside the target")
            if self.mor(A.identity(x)) != B.identity(self.obj(x)):
                raise ConsistencyError(f"identity of {x!r} is not preserved")
        for f in A.morphisms():
            g = self.mor(f)
            if B._src.get(g) != self.obj(A.src(f)) or B._tgt.get(g) != self.obj(A.tgt(f)):
                raise ConsistencyError(f"morphism {f!r} maps to {g!r} with wrong endpoints")
        for f, g in A._composable_pairs(rng):
            if self.mor(A.then(f, g)) != B.then(self.mor(f), self.mor(g)):
                raise ConsistencyError(f"composition is not preserved at {f!r}, {g!r}")
        return True


def identity_functor(A):
    return Functor(A, A, lambda x: x, lambda f: f, validate=False)


def compose_functors(F, G):
    """G after F."""
    if F.target is not G.source:
        raise InvalidArgument("functors do not compose: target and source differ")
    return Functor(F.source, G.target, lambda x: G.obj(F.obj(x)), lambda f: G.mor(F.mor(f)), validate=False)


def object_inclusion(A, x, point=None):
    """The functor from the point groupoid picking out x."""
    point = point or point_groupoid()
    star = point.objects[0]
    return Functor(point, A, {star: x}, {point.identity(star): A.identity(x)})


def to_point(A, point=None):
    point = point or point_groupoid()
    star = point.objects[0]
    e = point.identity(star)
    return Functor(A, point, lambda x: star, lambda f: e, validate=False)


def twisted_functor(F, eta):
    """F' naturally isomorphic to F: eta[a] is a morphism F(a) -> F'(a) in the target."""
    B = F.target
    for a in F.source.objects:
        if B.src(eta[a]) != F.obj(a):
            raise InvalidArgument(f"eta[{a!r}] does not start at F({a!r})")
    return Functor(F.source, B, lambda a: B.tgt(eta[a]),
                   lambda f: B.then(B.then(B.inverse(eta[F.source.src(f)]), F.mor(f)), eta[F.source.tgt(f)]))


def product_groupoid(A, B):
    objects = [(a, b) for a in A.objects for b in B.objects]
    morphisms = [((f, g), (A.src(f), B.src(g)), (A.tgt(f), B.tgt(g)))
                 for f in A.morphisms() for g in B.morphisms()]
    return FiniteGroupoid(objects, morphisms,
                          compose=lambda x, y: (A.then(x[0], y[0]), B.then(x[1], y[1])),
                          identity=lambda x: (A.identity(x[0]), B.identity(x[1])),
                          inverse=lambda f: (A.inverse(f[0]), B.inverse(f[1])),
                          name="product", validate=False)


def pairing(F, G, target):
    """x -> (F x, G x) into a product groupoid built from F.target and G.target."""
    if F.source is not G.source:
        raise InvalidArgument("pairing needs a common source")
    return Functor(F.source, target, lambda x: (F.obj(x), G.obj(x)), lambda f: (F.mor(f), G.mor(f)),
                   validate=False)


# 2-pullbacks

def two_pullback(F, G, validate=False):
    """Triples (a, b, phi: F a -> G b) with morphisms (alpha, beta) making the square commute.

    Returns (P, projection to A, projection to B).
    """
    if F.target is not G.target:
        raise InvalidArgument("functors must share their codomain")
    A, B, C = F.source, G.source, F.target
    objects = [(a, b, phi) for a in A.objects for b in B.objects for phi in C.hom(F.obj(a), G.obj(b))]

    def target_of(x, alpha, beta):
        phi = C.then(C.then(C.inverse(F.mor(alpha)), x[2]), G.mor(beta))
        return (A.tgt(alpha), B.tgt(beta), phi)

    morphisms = []
    for x in objects:
        for alpha in A.out(x[0]):
            for beta in B.out(x[1]):
                morphisms.append(((x, alpha, beta), x, target_of(x, alpha, beta)))

    def compose(f, g):
        return (f[0], A.then(f[1], g[1]), B.then(f[2], g[2]))

    def inverse(f):
        return (target_of(*f), A.inverse(f[1]), B.inverse(f[2]))

    P = FiniteGroupoid(objects, morphisms, compose, lambda x: (x, A.identity(x[0]), B.identity(x[1])),
                       inverse, name="2-pullback", validate=validate)
    pA = Functor(P, A, lambda x: x[0], lambda f: f[1], validate=validate)
    pB = Functor(P, B, lambda x: x[1], lambda f: f[2], validate=validate)
    return P, pA, pB


def two_pullback_profile(F, G):
    """Isomorphism classes of the 2-pullback without building it.

    Classes over a pair of classes [a], [b] are the orbits of Aut a x Aut b
    on Iso(F a, G b); the automorphism group of (a, b, phi) is the
    stabilizer.  Returns a list of (a, b, phi, aut order).
    """
    if F.target is not G.target:
        raise InvalidArgument("functors must share their codomain")
    A, B, C = F.source, G.source, F.target
    out = []
    for a in A.class_representatives():
        Fa = F.obj(a)
        aut_a = [C.inverse(F.mor(al)) for al in A.aut(a)]
        for b in B.class_representatives():
            isos = C.hom(Fa, G.obj(b))
            if not isos:
                continue
            aut_b = [G.mor(be) for be in B.aut(b)]
            seen = set()
            for phi in isos:
                if phi in seen:
                    continue
                orbit = {phi}
                queue = [phi]
                while queue:
                    psi = queue.pop()
                    for nxt in [C.then(x, psi) for x in aut_a] + [C.then(psi, y) for y in aut_b]:
                        if nxt not in orbit:
                            orbit.add(nxt)
                            queue.append(nxt)
                seen |= orbit
                order = len(aut_a) * len(aut_b) // len(orbit)
                out.append((a, b, phi, order))
    return out


def locate_in_profile(F, G, profile, x):
    """Index in `profile` of the class of the 2-pullback object x = (a, b, phi)."""
    A, B, C = F.source, G.source, F.target
    a, b, phi = x
    ra, alpha = A.representative(a)
    rb, beta = B.representative(b)
    # (ra, rb, F(alpha) phi G(beta)^-1) is isomorphic to x
    phi0 = C.then(C.then(F.mor(alpha), phi), C.inverse(G.mor(beta)))
    aut_a = [C.inverse(F.mor(al)) for al in A.aut(ra)]
    aut_b = [G.mor(be) for be in B.aut(rb)]
    candidates = {}
    for i, (pa, pb, psi, _) in enumerate(profile):
        if pa == ra and pb == rb:
            candidates[psi] = i
    orbit, queue = {phi0}, [phi0]
    while queue:
        psi = queue.pop()
        if psi in candidates:
            return candidates[psi]
        for nxt in [C.then(y, psi) for y in aut_a] + [C.then(psi, y) for y in aut_b]:
            if nxt not in orbit:
                orbit.add(nxt)
                queue.append(nxt)
    raise ConsistencyError(f"object {x!r} is in no class of the profile")


def strict_pullback(F, G, validate=False):
    """Pairs (a, b) with F a = G b and pairs of morphisms with F alpha = G beta."""
    if F.target is not G.target:
        raise InvalidArgument("functors must share their codomain")
    A, B, C = F.source, G.source, F.target
    objects = [(a, b) for a in A.objects for b in B.objects if F.obj(a) == G.obj(b)]
    by_image = {}
    for beta in B.morphisms():
        by_image.setdefault(G.mor(beta), []).append(beta)
    morphisms = []
    for a, b in objects:
        for alpha in A.out(a):
            for beta in by_image.get(F.mor(alpha), []):
                if B.src(beta) == b:
                    morphisms.append(((alpha, beta), (a, b), (A.tgt(alpha), B.tgt(beta))))
    P = FiniteGroupoid(objects, morphisms,
                       compose=lambda f, g: (A.then(f[0], g[0]), B.then(f[1], g[1])),
                       identity=lambda x: (A.identity(x[0]), B.identity(x[1])),
                       inverse=lambda f: (A.inverse(f[0]), B.inverse(f[1])),
                       name="strict pullback", validate=validate)
    return P, Functor(P, A, lambda x: x[0], lambda f: f[0], validate=False), \
        Functor(P, B, lambda x: x[1], lambda f: f[1], validate=False)


def is_isofibration(F):
    """Every morphism F(a) -> c lifts to a morphism out of a."""
    A, C = F.source, F.target
    for a in A.objects:
        images = {F.mor(f) for f in A.out(a)}
        if any(psi not in images for psi in C.out(F.obj(a))):
            return False
    return True


def equivalence_certificate(F):
    """(essentially surjective, fully faithful) checked on every object and hom-set."""
    A, B = F.source, F.target
    hit = {B.class_of(F.obj(a)) for a in A.objects}
    surjective = all(B.class_of(b) in hit for b in B.objects)
    faithful = True
    for x in A.objects:
        for y in A.objects:
            homs = A.hom(x, y)
            images = {F.mor(f) for f in homs}
            if len(images) != len(homs) or len(images) != len(B.hom(F.obj(x), F.obj(y))):
                faithful = False
                break
        if not faithful:
            break
    return surjective, faithful


def is_equivalence(F):
    """Bijection on iso classes and equal automorphism orders; full certificate on small sources."""
    A, B = F.source, F.target
    if A.n_morphisms + B.n_morphisms <= CERTIFICATE_BOUND:
        return all(equivalence_certificate(F))
    images = [B.class_of(F.obj(r)) for r in A.class_representatives()]
    if len(set(images)) != len(images) or len(images) != len(B.class_representatives()):
        return False
    return all(A.aut_order(r) == B.aut_order(F.obj(r)) for r in A.class_representatives())


# groupoid functions

class GroupoidFunction:
    """Exact rational values on objects, constant on isomorphism classes; missing objects are 0."""

    def __init__(self, base, values):
        self.base = base
        vals = {x: Fraction(v) for x, v in dict(values).items() if v}
        for x in vals:
            if x not in base._index:
                raise InvalidArgument(f"{x!r} is not an object of the base groupoid")
        for x in base.objects:
            r = base.class_of(x)
            if vals.get(x, 0) != vals.get(r, 0):
                raise InvalidArgument(f"value at {x!r} differs from its class representative {r!r}")
        self.values = vals

    @classmethod
    def from_classes(cls, base, class_values):
        """Extend values given on some objects to their whole classes."""
        by_rep = {base.class_of(x): Fraction(v) for x, v in dict(class_values).items()}
        return cls(base, {x: by_rep.get(base.class_of(x), 0) for x in base.objects})

    @classmethod
    def indicator(cls, base, x):
        return cls.from_classes(base, {x: 1})

    @classmethod
    def constant(cls, base, c):
        return cls(base, {x: c for x in base.objects})

    def __call__(self, x):
        return self.values.get(x, Fraction(0))

    def vector(self):
        return [self(r) for r in self.base.class_representatives()]

    def __eq__(self, other):
        return isinstance(other, GroupoidFunction) and other.base is self.base and other.values == self.values

    def __hash__(self):
        return hash(frozenset(self.values.items()))

    def __repr__(self):
        return f"GroupoidFunction({self.vector()})"


def integrate(phi):
    """Sum over classes of phi/|Aut|."""
    A = phi.base
    return sum((phi(r) / A.aut_order(r) for r in A.class_representatives()), Fraction(0))


def pullback_fn(F, phi):
    if phi.base is not F.target:
        raise InvalidArgument("function does not live on the target of the functor")
    return GroupoidFunction(F.source, {a: phi(F.obj(a)) for a in F.source.objects})


def pushforward(F, phi, literal=False):
    """Integration over the 2-fibers of F.

    The default sums phi(a) |Aut b| / |Aut a| over classes [a] with F(a)
    isomorphic to b; with literal=True each 2-fiber is built as a groupoid
    and integrated directly.
    """
    if phi.base is not F.source:
        raise InvalidArgument("function does not live on the source of the functor")
    A, B = F.source, F.target
    out = {}
    if literal:
        point = point_groupoid()
        for b in B.class_representatives():
            fiber, p, _ = two_pullback(F, object_inclusion(B, b, point))
            out[b] = integrate(pullback_fn(p, phi)) if fiber.objects else Fraction(0)
    else:
        for a in A.class_representatives():
            if phi(a):
                b = B.class_of(F.obj(a))
                out[b] = out.get(b, Fraction(0)) + phi(a) * B.aut_order(b) / A.aut_order(a)
    return GroupoidFunction.from_classes(B, out)


def _matmul(x, y):
    return [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in zip(*y)] for row in x]


def _identity_matrix(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


class LinearMap:
    """Matrix on indicator bases: rows are target classes, columns source classes."""

    def __init__(self, rows, cols, entries):
        self.rows, self.cols = list(rows), list(cols)
        self.entries = [[Fraction(v) for v in row] for row in entries]
        if len(self.entries) != len(self.rows) or any(len(r) != len(self.cols) for r in self.entries):
            raise InvalidArgument("matrix shape does not match the class lists")

    def entry(self, row, col):
        return self.entries[self.rows.index(row)][self.cols.index(col)]

    def __matmul__(self, other):
        if other.rows != self.cols:
            raise InvalidArgument("class lists do not match")
        if not self.cols:
            return LinearMap(self.rows, other.cols, [[0] * len(other.cols) for _ in self.rows])
        return LinearMap(self.rows, other.cols, _matmul(self.entries, other.entries))

    def __eq__(self, other):
        return isinstance(other, LinearMap) and (self.rows, self.cols, self.entries) == \
            (other.rows, other.cols, other.entries)

    def is_zero(self):
        return all(v == 0 for row in self.entries for v in row)

    def to_json(self):
        return {"rows": [repr(r) for r in self.rows], "cols": [repr(c) for c in self.cols],
                "entries": [[str(v) for v in row] for row in self.entries]}

    def __repr__(self):
        return f"LinearMap({len(self.rows)}x{len(self.cols)})"


def pullback_matrix(F):
    A, B = F.source, F.target
    cols = B.class_representatives()
    rows = A.class_representatives()
    return LinearMap(rows, cols, [[int(B.class_of(F.obj(a)) == b) for b in cols] for a in rows])


def pushforward_matrix(F):
    A, B = F.source, F.target
    rows = B.class_representatives()
    cols = A.class_representatives()
    entries = [[Fraction(0)] * len(cols) for _ in rows]
    pos = {b: i for i, b in enumerate(rows)}
    for j, a in enumerate(cols):
        b = B.class_of(F.obj(a))
        entries[pos[b]][j] = Fraction(B.aut_order(b), A.aut_order(a))
    return LinearMap(rows, cols, entries)


class GroupoidSpan:
    """A <- X -> B given by two functors out of the apex X."""

    def __init__(self, left, right):
        if left.source is not right.source:
            raise InvalidArgument("span legs must share the apex")
        self.apex, self.left, self.right = left.source, left, right

    @property
    def source(self):
        return self.left.target

    @property
    def target(self):
        return self.right.target


def identity_span(A):
    return GroupoidSpan(identity_functor(A), identity_functor(A))


def compose_spans(s1, s2):
    """s2 after s1, with apex the 2-pullback of s1.right and s2.left."""
    if s1.target is not s2.source:
        raise InvalidArgument("span mismatch: the middle groupoids differ")
    P, p1, p2 = two_pullback(s1.right, s2.left)
    return GroupoidSpan(compose_functors(p1, s1.left), compose_functors(p2, s2.right))


def span_to_linear_map(s):
    """R_! L* on indicator functions of isomorphism classes."""
    return pushforward_matrix(s.right) @ pullback_matrix(s.left)


def homotopy_cardinality(pi_data):
    """Sum over components of |pi_1|^-1 |pi_2| |pi_3|^-1 ..."""
    total = Fraction(0)
    for orders in pi_data:
        term = Fraction(1)
        for i, n in enumerate(orders, start=1):
            if n <= 0:
                raise InvalidArgument("homotopy group orders must be positive")
            term = term / n if i % 2 else term * n
        total += term
    return total


def groupoid_cardinality(A):
    return A.cardinality()
