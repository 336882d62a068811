"""Finite groupoids, nerves, and local systems.

Conventions, fixed once for the whole library: an edge z of a simplicial
set has its start at face 1 (vertex 0) and its end at face 0 (vertex 1).
Composition ``compose(g, f)`` applies f first.  With these choices the
recovery of a groupoid from its nerve reads: multiplication sends a pair
(f, g) with end(f) = start(g) to face 1 of the unique triangle whose
face 2 is f and face 0 is g.

A local system over a base Y assigns a finite fiber to every vertex and a
transition bijection along every edge, running from the fiber at the edge's
end to the fiber at its start; degenerate edges must carry identities and
every triangle must commute (the cocycle condition).
"""

from .errors import CocycleError, NotHypergroupoidError, SimplicialError
from .matching import HornTuple, is_cartesian, is_n_hypergroupoid, partial_matching_map
from .simplex import MonotoneMap
from .ssets import (
    SimplexId,
    SimplicialMorphism,
    TruncatedSimplicialSet,
    build_sset,
)


class FiniteGroupoid:
    """Objects, arrows, and a composition table; all laws are verified."""

    def __init__(self, objects, arrows, source, target, compose, identities, inverses,
                 validate=True):
        self.objects = frozenset(objects)
        self.arrows = frozenset(arrows)
        self.source = dict(source)
        self.target = dict(target)
        self.composition = dict(compose)  # (g, f) -> g after f
        self.identities = dict(identities)
        self.inverses = dict(inverses)
        if validate:
            self.validate()

    def compose(self, g, f):
        """g after f; defined when target(f) = source(g)."""
        return self.composition[(g, f)]

    def hom(self, x, y):
        return tuple(
            sorted(
                (a for a in self.arrows if self.source[a] == x and self.target[a] == y),
                key=repr,
            )
        )

    def validate(self):
        for a in self.arrows:
            if self.source[a] not in self.objects or self.target[a] not in self.objects:
                raise SimplicialError(f"arrow {a!r} has endpoints outside the object set")
        for x in self.objects:
            e = self.identities[x]
            if self.source[e] != x or self.target[e] != x:
                raise SimplicialError(f"identity of {x!r} has wrong endpoints")
        composable = [
            (g, f)
            for f in self.arrows
            for g in self.arrows
            if self.target[f] == self.source[g]
        ]
        for g, f in composable:
            if (g, f) not in self.composition:
                raise SimplicialError(f"missing composite of {g!r} after {f!r}")
            h = self.composition[(g, f)]
            if self.source[h] != self.source[f] or self.target[h] != self.target[g]:
                raise SimplicialError(f"composite {h!r} has wrong endpoints")
        for a in self.arrows:
            if self.compose(a, self.identities[self.source[a]]) != a:
                raise SimplicialError(f"right identity law fails at {a!r}")
            if self.compose(self.identities[self.target[a]], a) != a:
                raise SimplicialError(f"left identity law fails at {a!r}")
            inv = self.inverses[a]
            if self.compose(inv, a) != self.identities[self.source[a]]:
                raise SimplicialError(f"inverse law fails at {a!r}")
            if self.compose(a, inv) != self.identities[self.target[a]]:
                raise SimplicialError(f"inverse law fails at {a!r}")
        for g, f in composable:
            for h in self.arrows:
                if self.target[h] == self.source[f]:
                    if self.compose(self.compose(g, f), h) != self.compose(
                        g, self.compose(f, h)
                    ):
                        raise SimplicialError(
                            f"associativity fails on ({g!r}, {f!r}, {h!r})"
                        )
        return self

    def is_discrete(self):
        return all(a in self.identities.values() for a in self.arrows)

    def connected_components(self):
        parent = {x: x for x in self.objects}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in self.arrows:
            rs, rt = find(self.source[a]), find(self.target[a])
            if rs != rt:
                parent[rs] = rt
        comps = {}
        for x in self.objects:
            comps.setdefault(find(x), set()).add(x)
        return tuple(frozenset(c) for c in comps.values())

    def verify_isomorphism(self, other, object_map, arrow_map):
        """Check that the given maps are a groupoid isomorphism onto other."""
        if set(object_map) != self.objects or set(arrow_map) != self.arrows:
            return False
        if set(object_map.values()) != other.objects or len(set(object_map.values())) != len(
            self.objects
        ):
            return False
        if set(arrow_map.values()) != other.arrows or len(set(arrow_map.values())) != len(
            self.arrows
        ):
            return False
        for a in self.arrows:
            if other.source[arrow_map[a]] != object_map[self.source[a]]:
                return False
            if other.target[arrow_map[a]] != object_map[self.target[a]]:
                return False
        for x in self.objects:
            if arrow_map[self.identities[x]] != other.identities[object_map[x]]:
                return False
        for (g, f), h in self.composition.items():
            if other.compose(arrow_map[g], arrow_map[f]) != arrow_map[h]:
                return False
        return True

    def __repr__(self):
        return f"FiniteGroupoid({len(self.objects)} objects, {len(self.arrows)} arrows)"


# -- constructors ---------------------------------------------------------


def discrete_groupoid(objects) -> FiniteGroupoid:
    """Only identity arrows."""
    objects = list(objects)
    arrows = {x: ("id", x) for x in objects}
    return FiniteGroupoid(
        objects,
        arrows.values(),
        {a: x for x, a in arrows.items()},
        {a: x for x, a in arrows.items()},
        {(a, a): a for a in arrows.values()},
        arrows,
        {a: a for a in arrows.values()},
    )


def indiscrete_groupoid(objects) -> FiniteGroupoid:
    """Exactly one arrow between any ordered pair of objects."""
    objects = list(objects)
    arrows = [(x, y) for x in objects for y in objects]
    return FiniteGroupoid(
        objects,
        arrows,
        {(x, y): x for x, y in arrows},
        {(x, y): y for x, y in arrows},
        {((y, z), (x, y2)): (x, z) for (y, z) in arrows for (x, y2) in arrows if y2 == y},
        {x: (x, x) for x in objects},
        {(x, y): (y, x) for x, y in arrows},
    )


def from_group_table(elements, multiply) -> FiniteGroupoid:
    """The one-object groupoid of a finite group given by its table.

    ``multiply(g, f)`` is the product g*f, applied as "f then g".
    """
    elements = list(elements)
    unit = None
    for e in elements:
        if all(multiply(e, x) == x and multiply(x, e) == x for x in elements):
            unit = e
            break
    if unit is None:
        raise SimplicialError("no identity element in table")
    inverses = {}
    for x in elements:
        for y in elements:
            if multiply(x, y) == unit and multiply(y, x) == unit:
                inverses[x] = y
                break
        else:
            raise SimplicialError(f"no inverse for {x!r}")
    obj = "*"
    return FiniteGroupoid(
        [obj],
        elements,
        {x: obj for x in elements},
        {x: obj for x in elements},
        {(g, f): multiply(g, f) for g in elements for f in elements},
        {obj: unit},
        inverses,
    )


def disjoint_union_groupoids(G, H) -> FiniteGroupoid:
    def tag(t, v):
        return (t, v)

    objects = [tag(0, x) for x in G.objects] + [tag(1, x) for x in H.objects]
    arrows = [tag(0, a) for a in G.arrows] + [tag(1, a) for a in H.arrows]
    source = {tag(0, a): tag(0, G.source[a]) for a in G.arrows}
    source.update({tag(1, a): tag(1, H.source[a]) for a in H.arrows})
    target = {tag(0, a): tag(0, G.target[a]) for a in G.arrows}
    target.update({tag(1, a): tag(1, H.target[a]) for a in H.arrows})
    comp = {(tag(0, g), tag(0, f)): tag(0, h) for (g, f), h in G.composition.items()}
    comp.update({(tag(1, g), tag(1, f)): tag(1, h) for (g, f), h in H.composition.items()})
    idents = {tag(0, x): tag(0, a) for x, a in G.identities.items()}
    idents.update({tag(1, x): tag(1, a) for x, a in H.identities.items()})
    invs = {tag(0, a): tag(0, b) for a, b in G.inverses.items()}
    invs.update({tag(1, a): tag(1, b) for a, b in H.inverses.items()})
    return FiniteGroupoid(objects, arrows, source, target, comp, idents, invs)


def product_groupoids(G, H) -> FiniteGroupoid:
    objects = [(x, y) for x in G.objects for y in H.objects]
    arrows = [(a, b) for a in G.arrows for b in H.arrows]
    return FiniteGroupoid(
        objects,
        arrows,
        {(a, b): (G.source[a], H.source[b]) for a, b in arrows},
        {(a, b): (G.target[a], H.target[b]) for a, b in arrows},
        {
            ((g, h), (f, e)): (G.composition[(g, f)], H.composition[(h, e)])
            for (g, h) in arrows
            for (f, e) in arrows
            if G.target[f] == G.source[g] and H.target[e] == H.source[h]
        },
        {(x, y): (G.identities[x], H.identities[y]) for x, y in objects},
        {(a, b): (G.inverses[a], H.inverses[b]) for a, b in arrows},
    )


# -- the nerve and its inverse --------------------------------------------


def nerve(G: FiniteGroupoid, N: int) -> TruncatedSimplicialSet:
    """Composable arrow strings; level n holds the strings of length n.

    Faces drop an outer arrow or compose an adjacent pair; degeneracies
    insert identities.  Level 0 is the object set.
    """
    strings = {0: [x for x in sorted(G.objects, key=repr)]}
    for n in range(1, N + 1):
        if n == 1:
            strings[1] = [(a,) for a in sorted(G.arrows, key=repr)]
        else:
            strings[n] = [
                s + (a,)
                for s in strings[n - 1]
                for a in sorted(G.arrows, key=repr)
                if G.target[s[-1]] == G.source[a]
            ]

    def face(i, j, key):
        if i == 1:
            return G.target[key[0]] if j == 0 else G.source[key[0]]
        if j == 0:
            return key[1:]
        if j == i:
            return key[:-1]
        return key[: j - 1] + (G.compose(key[j], key[j - 1]),) + key[j + 1 :]

    def degeneracy(i, j, key):
        if i == 0:
            return (G.identities[key],)
        anchor = G.source[key[j]] if j < i else G.target[key[i - 1]]
        return key[:j] + (G.identities[anchor],) + key[j:]

    return build_sset(N, lambda n: strings[n], face, degeneracy, validate=True)


def fundamental_groupoid(X: TruncatedSimplicialSet) -> FiniteGroupoid:
    """Recover the groupoid from a simplicial set with unique fillers above
    level 1: objects are vertices, arrows are edges, composites come from
    inner-horn fillers, and inverses from outer-horn fillers.

    Refuses anything that does not verify as a 1-stage hypergroupoid rather
    than guessing composites.
    """
    report = is_n_hypergroupoid(X, 1)
    if not report.passed:
        raise NotHypergroupoidError(
            f"input is not a groupoid-like object: {report.failures[0].detail}"
        )
    objects = list(X.level(0))
    arrows = list(X.level(1))
    source = {z: X.face(1, z) for z in arrows}
    target = {z: X.face(0, z) for z in arrows}
    identities = {x: X.degeneracy(0, x) for x in objects}

    inner = partial_matching_map(X, 2, 1)
    composition = {}
    for f in arrows:
        for g in arrows:
            if target[f] != source[g]:
                continue
            t = HornTuple(2, 1, ((0, g), (2, f)))
            w = inner.fibers[t]
            composition[(g, f)] = X.face(1, w[0])

    outer = partial_matching_map(X, 2, 0)
    inverses = {}
    for f in arrows:
        t = HornTuple(2, 0, ((1, identities[source[f]]), (2, f)))
        w = outer.fibers[t]
        inverses[f] = X.face(0, w[0])

    return FiniteGroupoid(objects, arrows, source, target, composition, identities, inverses)


def nerve_recovery_morphism(X: TruncatedSimplicialSet) -> SimplicialMorphism:
    """The canonical comparison from the nerve of the recovered groupoid
    back into X; a levelwise bijection exactly when X is the nerve of its
    fundamental groupoid, which the roundtrip tests assert."""
    G = fundamental_groupoid(X)
    B = nerve(G, X.truncation)
    comps = {0: {SimplexId(0, x): x for x in X.level(0)}}
    if X.truncation >= 1:
        comps[1] = {SimplexId(1, (z,)): z for z in X.level(1)}
    fillers = {}
    for n in range(2, X.truncation + 1):
        fillers[n] = partial_matching_map(X, n, 1)
    for n in range(2, X.truncation + 1):
        comps[n] = {}
        for s in B.level(n):
            entries = tuple(
                (i, comps[n - 1][B.face(i, s)]) for i in range(n + 1) if i != 1
            )
            fiber = fillers[n].fibers[HornTuple(n, 1, entries)]
            if len(fiber) != 1:
                raise NotHypergroupoidError(f"filler at level {n} not unique for {s!r}")
            comps[n][s] = fiber[0]
    return SimplicialMorphism(B, X, comps)


# -- local systems ---------------------------------------------------------


class LocalSystemData:
    """Fibers over vertices plus transition bijections over edges.

    A transition over an edge z runs from the fiber at face 0 of z to the
    fiber at face 1 of z.  Degenerate edges must carry identities, and the
    two-simplex compatibility (the cocycle condition) is verified on
    construction; a violation is reported with the offending simplex.
    """

    def __init__(self, base: TruncatedSimplicialSet, fibers, transitions, validate=True):
        if base.truncation < 2:
            raise SimplicialError("local systems need the base stored through level 2")
        self.base = base
        self.fibers = {v: frozenset(f) for v, f in fibers.items()}
        self.transitions = {z: dict(t) for z, t in transitions.items()}
        if validate:
            self.validate()

    def transition(self, z):
        return self.transitions[z]

    def validate(self):
        Y = self.base
        if set(self.fibers) != Y.level_set(0):
            raise SimplicialError("fibers must be indexed by exactly the vertices")
        if set(self.transitions) != Y.level_set(1):
            raise SimplicialError("transitions must be indexed by exactly the edges")
        for z, t in self.transitions.items():
            dom = self.fibers[Y.face(0, z)]
            cod = self.fibers[Y.face(1, z)]
            if set(t) != dom or set(t.values()) != cod or len(set(t.values())) != len(t):
                raise SimplicialError(f"transition over {z!r} is not a bijection")
        for y in Y.level(0):
            e = Y.degeneracy(0, y)
            if any(self.transitions[e][a] != a for a in self.fibers[y]):
                raise SimplicialError(f"degenerate edge over {y!r} must carry the identity")
        for w in Y.level(2):
            t0 = self.transitions[Y.face(0, w)]
            t1 = self.transitions[Y.face(1, w)]
            t2 = self.transitions[Y.face(2, w)]
            for a in t0:
                if t2[t0[a]] != t1[a]:
                    raise CocycleError(
                        f"cocycle fails on the 2-simplex {w!r} at fiber element {a!r}",
                        simplex=w,
                    )
        return self


def constant_local_system(base, fiber) -> LocalSystemData:
    """Same fiber everywhere, identity transitions."""
    fiber = frozenset(fiber)
    return LocalSystemData(
        base,
        {v: fiber for v in base.level(0)},
        {z: {a: a for a in fiber} for z in base.level(1)},
    )


def local_system_total(data: LocalSystemData) -> SimplicialMorphism:
    """The projection from the total object of a local system to its base.

    A level-n simplex of the total object is a base simplex together with
    an element of the fiber over its first vertex; operators transport the
    element backwards along the edge from vertex 0 when face 0 is taken.
    """
    Y = data.base
    N = Y.truncation
    inverse = {z: {b: a for a, b in t.items()} for z, t in data.transitions.items()}

    def first_vertex(w):
        return Y.act(MonotoneMap(0, w.level, (0,)), w) if w.level else w

    def keys(n):
        return ((w.key, a) for w in Y.level(n) for a in sorted(data.fibers[first_vertex(w)], key=repr))

    def face(i, j, key):
        wkey, a = key
        w = SimplexId(i, wkey)
        if j >= 1:
            return (Y.face(j, w).key, a)
        lead = Y.act(MonotoneMap(1, i, (0, 1)), w)
        return (Y.face(0, w).key, inverse[lead][a])

    def degeneracy(i, j, key):
        wkey, a = key
        return (Y.degeneracy(j, SimplexId(i, wkey)).key, a)

    total = build_sset(N, keys, face, degeneracy, validate=True)
    comps = {
        n: {s: SimplexId(n, s.key[0]) for s in total.level(n)} for n in range(N + 1)
    }
    return SimplicialMorphism(total, Y, comps)


def descent_data(f: SimplicialMorphism) -> LocalSystemData:
    """Extract fibers and transitions from a morphism whose face squares are
    pullbacks; refuses non-Cartesian input."""
    report = is_cartesian(f)
    if not report.passed:
        raise SimplicialError(
            f"descent data needs a Cartesian morphism: {report.failures[0].detail}"
        )
    X, Y = f.source, f.target
    fibers = {
        y: frozenset(x for x in X.level(0) if f(x) == y) for y in Y.level(0)
    }
    lift = {}
    for xe in X.level(1):
        lift[(X.face(0, xe), f(xe))] = xe
    transitions = {}
    for z in Y.level(1):
        t = {}
        for a in fibers[Y.face(0, z)]:
            xe = lift[(a, z)]
            t[a] = X.face(1, xe)
        transitions[z] = t
    return LocalSystemData(Y, fibers, transitions)
