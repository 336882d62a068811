"""Finite truncated simplicial sets.

A simplicial set is stored through a truncation level N: every simplex up
to level N is kept explicitly (degenerate ones included), with face and
degeneracy maps as dictionaries.  Beyond its truncation an object is read
as its own coskeleton, which loses nothing for the hypergroupoids this
library checks and keeps every question finite.

Simplices are identified by opaque ids, not by structural content, so
disjoint unions and quotients never collide.  All objects are immutable
after construction and safe to share.
"""

from dataclasses import dataclass

from .errors import EnumerationLimitError, SimplicialError, TruncationError
from .simplex import MonotoneMap, codegeneracy, coface, compose, identity, monotone_maps

_enumeration_limit = None


def set_enumeration_limit(limit):
    """Cap the work done by :func:`hom_set` searches (None disables)."""
    global _enumeration_limit
    _enumeration_limit = None if limit is None else int(limit)


@dataclass(frozen=True)
class SimplexId:
    """An opaque simplex identifier together with its level."""

    level: int
    key: object

    def __repr__(self):
        return f"<{self.level}:{self.key!r}>"


def _skey(sid: SimplexId):
    # deterministic total order on heterogeneous keys
    return repr(sid.key)


class TruncatedSimplicialSet:
    """Levelwise finite simplicial set stored up to a truncation level."""

    def __init__(self, truncation, levels, faces, degeneracies, validate=True):
        """``levels[i]`` lists the level-i simplices; ``faces[(i, j)]`` and
        ``degeneracies[(i, j)]`` map ids to ids one level down resp. up."""
        if truncation < 0:
            raise SimplicialError("truncation must be >= 0")
        self.truncation = truncation
        self._levels = tuple(
            tuple(sorted(levels.get(i, ()), key=_skey)) for i in range(truncation + 1)
        )
        self._level_sets = tuple(frozenset(l) for l in self._levels)
        self._faces = {k: dict(v) for k, v in faces.items()}
        self._degeneracies = {k: dict(v) for k, v in degeneracies.items()}
        self._nondegenerate = None
        self._decompositions = {}
        self._face_index = {}
        self._degeneracy_inverse = {}
        if validate:
            self.validate()

    # -- basic access -------------------------------------------------

    def level(self, i):
        if not 0 <= i <= self.truncation:
            raise TruncationError(f"level {i} outside stored truncation {self.truncation}")
        return self._levels[i]

    def level_set(self, i):
        return self._level_sets[i]

    def has(self, s: SimplexId):
        return 0 <= s.level <= self.truncation and s in self._level_sets[s.level]

    def face(self, j, s: SimplexId) -> SimplexId:
        return self._faces[(s.level, j)][s]

    def degeneracy(self, j, s: SimplexId) -> SimplexId:
        return self._degeneracies[(s.level, j)][s]

    @property
    def total_size(self):
        return sum(len(l) for l in self._levels)

    def __repr__(self):
        sizes = ", ".join(str(len(l)) for l in self._levels)
        return f"TruncatedSimplicialSet(N={self.truncation}, levels=[{sizes}])"

    # -- operator action ----------------------------------------------

    def act(self, f: MonotoneMap, s: SimplexId) -> SimplexId:
        """Contravariant action: the image of ``s`` under the operator ``f``.

        ``f`` must start at some ordinal within the truncation and end at
        ``[s.level]``; the result lives at level ``f.domain``.
        """
        if f.codomain != s.level:
            raise SimplicialError(f"operator ends at [{f.codomain}] but simplex has level {s.level}")
        if f.domain > self.truncation:
            raise TruncationError(f"operator starts above truncation {self.truncation}")
        return self._act(f, s)

    def _act(self, f, s):
        if f.is_identity:
            return s
        if not f.is_surjective:
            image = set(f.values)
            a = max(v for v in range(f.codomain + 1) if v not in image)
            f2 = MonotoneMap(
                f.domain, f.codomain - 1, tuple(v if v < a else v - 1 for v in f.values)
            )
            return self._act(f2, self.face(a, s))
        p = next(i for i in range(f.domain) if f.values[i] == f.values[i + 1])
        f2 = MonotoneMap(f.domain - 1, f.codomain, f.values[: p + 1] + f.values[p + 2 :])
        return self.degeneracy(p, self._act(f2, s))

    # -- degeneracy bookkeeping ----------------------------------------

    def nondegenerate(self, i):
        """Level-i simplices that are not in the image of any degeneracy."""
        if self._nondegenerate is None:
            degenerate = [set() for _ in range(self.truncation + 1)]
            for (lvl, _j), table in self._degeneracies.items():
                degenerate[lvl + 1].update(table.values())
            self._nondegenerate = tuple(
                tuple(s for s in self._levels[l] if s not in degenerate[l])
                for l in range(self.truncation + 1)
            )
        return self._nondegenerate[i]

    def decompose(self, s: SimplexId):
        """The unique pair ``(epi, base)`` with base nondegenerate and
        ``act(epi, base) == s`` (the Eilenberg-Zilber representation)."""
        cached = self._decompositions.get(s)
        if cached is not None:
            return cached
        result = None
        for j in range(s.level):
            inv = self._degeneracy_inv(s.level - 1, j)
            t = inv.get(s)
            if t is not None:
                epi2, base = self.decompose(t)
                result = (compose(epi2, codegeneracy(j, s.level - 1)), base)
                break
        if result is None:
            result = (identity(s.level), s)
        self._decompositions[s] = result
        return result

    def _degeneracy_inv(self, level, j):
        key = (level, j)
        inv = self._degeneracy_inverse.get(key)
        if inv is None:
            inv = {v: k for k, v in self._degeneracies.get(key, {}).items()}
            self._degeneracy_inverse[key] = inv
        return inv

    def face_index(self, level, j):
        """Lookup from a level-(level-1) id to the level-`level` simplices
        having it as j-th face."""
        key = (level, j)
        idx = self._face_index.get(key)
        if idx is None:
            idx = {}
            for s, t in self._faces.get(key, {}).items():
                idx.setdefault(t, set()).add(s)
            self._face_index[key] = idx
        return idx

    # -- validation ----------------------------------------------------

    def validate(self):
        """Check operator totality and the five simplicial identities."""
        N = self.truncation
        for i in range(1, N + 1):
            for j in range(i + 1):
                table = self._faces.get((i, j))
                if table is None or set(table) != self._level_sets[i]:
                    raise SimplicialError(f"face ({i},{j}) not total")
                for s, t in table.items():
                    if t not in self._level_sets[i - 1]:
                        raise SimplicialError(f"face ({i},{j}) leaves the object at {s}")
        for i in range(N):
            for j in range(i + 1):
                table = self._degeneracies.get((i, j))
                if table is None or set(table) != self._level_sets[i]:
                    raise SimplicialError(f"degeneracy ({i},{j}) not total")
                for s, t in table.items():
                    if t not in self._level_sets[i + 1]:
                        raise SimplicialError(f"degeneracy ({i},{j}) leaves the object at {s}")
        for i in range(2, N + 1):
            for s in self._levels[i]:
                for j in range(i + 1):
                    for k in range(j):
                        # d_k d_j = d_{j-1} d_k for k < j
                        if self.face(k, self.face(j, s)) != self.face(j - 1, self.face(k, s)):
                            raise SimplicialError(
                                f"face identity fails at level {i}, pair ({k},{j}), simplex {s}"
                            )
        for i in range(N - 1):
            for s in self._levels[i]:
                for j in range(i + 1):
                    for k in range(j + 1):
                        # s_k s_j = s_{j+1} s_k for k <= j
                        lhs = self.degeneracy(j + 1, self.degeneracy(k, s))
                        rhs = self.degeneracy(k, self.degeneracy(j, s))
                        if lhs != rhs:
                            raise SimplicialError(
                                f"degeneracy identity fails at level {i}, pair ({k},{j}), {s}"
                            )
        for i in range(N):
            for s in self._levels[i]:
                for j in range(i + 1):
                    t = self.degeneracy(j, s)
                    for k in range(i + 2):
                        got = self.face(k, t)
                        if k == j or k == j + 1:
                            expect = s
                        elif k < j:
                            expect = self.degeneracy(j - 1, self.face(k, s))
                        else:
                            expect = self.degeneracy(j, self.face(k - 1, s))
                        if got != expect:
                            raise SimplicialError(
                                f"mixed identity fails at level {i}, face {k} of s_{j}{s}"
                            )
        return self


def build_sset(truncation, level_keys, face_key, degeneracy_key, validate=True):
    """Assemble a simplicial set from key-level descriptions.

    ``level_keys[i]`` iterates the raw keys at level i; ``face_key(i, j, key)``
    and ``degeneracy_key(i, j, key)`` give the raw keys of the operator images.
    """
    levels = {}
    for i in range(truncation + 1):
        levels[i] = [SimplexId(i, k) for k in level_keys(i)]
    faces = {}
    degeneracies = {}
    for i in range(1, truncation + 1):
        for j in range(i + 1):
            faces[(i, j)] = {s: SimplexId(i - 1, face_key(i, j, s.key)) for s in levels[i]}
    for i in range(truncation):
        for j in range(i + 1):
            degeneracies[(i, j)] = {
                s: SimplexId(i + 1, degeneracy_key(i, j, s.key)) for s in levels[i]
            }
    return TruncatedSimplicialSet(truncation, levels, faces, degeneracies, validate=validate)


# -- standard objects ---------------------------------------------------


def standard_simplex(n, N) -> TruncatedSimplicialSet:
    """The combinatorial n-simplex through truncation N.

    Level i holds every monotone map [i] -> [n] (as its value tuple), and
    operators act by precomposition, so mapping out of it evaluates at the
    top cell: morphisms from it into X correspond to level-n simplices of X.
    """
    return build_sset(
        N,
        lambda i: (f.values for f in monotone_maps(i, n)),
        lambda i, j, key: key[:j] + key[j + 1 :],
        lambda i, j, key: key[: j + 1] + key[j:],
        validate=False,
    )


def boundary(n, N) -> TruncatedSimplicialSet:
    """Simplices of the n-simplex whose values omit some element of [n].

    For n = 0 nothing qualifies, so the boundary of a point is empty.
    """
    full = set(range(n + 1))
    return build_sset(
        N,
        lambda i: (f.values for f in monotone_maps(i, n) if set(f.values) != full),
        lambda i, j, key: key[:j] + key[j + 1 :],
        lambda i, j, key: key[: j + 1] + key[j:],
        validate=False,
    )


def horn(n, k, N) -> TruncatedSimplicialSet:
    """Simplices of the n-simplex omitting some element of [n] other than k."""
    if n < 1 or not 0 <= k <= n:
        raise SimplicialError(f"no horn for (n, k) = ({n}, {k})")
    others = set(range(n + 1)) - {k}
    return build_sset(
        N,
        lambda i: (
            f.values for f in monotone_maps(i, n) if others - set(f.values)
        ),
        lambda i, j, key: key[:j] + key[j + 1 :],
        lambda i, j, key: key[: j + 1] + key[j:],
        validate=False,
    )


def constant_simplicial_set(keys, N) -> TruncatedSimplicialSet:
    """The constant simplicial set on a finite collection of keys."""
    keys = tuple(keys)
    return build_sset(
        N,
        lambda i: keys,
        lambda i, j, key: key,
        lambda i, j, key: key,
        validate=False,
    )


def truncate(X: TruncatedSimplicialSet, N) -> TruncatedSimplicialSet:
    """Forget the levels above N."""
    if N > X.truncation:
        raise TruncationError(f"cannot truncate to {N}: only {X.truncation} levels stored")
    return TruncatedSimplicialSet(
        N,
        {i: X.level(i) for i in range(N + 1)},
        {(i, j): X._faces[(i, j)] for i in range(1, N + 1) for j in range(i + 1)},
        {(i, j): X._degeneracies[(i, j)] for i in range(N) for j in range(i + 1)},
        validate=False,
    )


def product(X, Y) -> TruncatedSimplicialSet:
    """Levelwise product with the diagonal operator action."""
    if X.truncation != Y.truncation:
        raise TruncationError("product needs equal truncations")
    N = X.truncation
    levels = {}
    for i in range(N + 1):
        levels[i] = [SimplexId(i, (x.key, y.key)) for x in X.level(i) for y in Y.level(i)]
    faces = {}
    degeneracies = {}
    for i in range(1, N + 1):
        for j in range(i + 1):
            faces[(i, j)] = {
                s: SimplexId(
                    i - 1,
                    (
                        X.face(j, SimplexId(i, s.key[0])).key,
                        Y.face(j, SimplexId(i, s.key[1])).key,
                    ),
                )
                for s in levels[i]
            }
    for i in range(N):
        for j in range(i + 1):
            degeneracies[(i, j)] = {
                s: SimplexId(
                    i + 1,
                    (
                        X.degeneracy(j, SimplexId(i, s.key[0])).key,
                        Y.degeneracy(j, SimplexId(i, s.key[1])).key,
                    ),
                )
                for s in levels[i]
            }
    return TruncatedSimplicialSet(N, levels, faces, degeneracies, validate=False)


def disjoint_union(X, Y) -> TruncatedSimplicialSet:
    """Coproduct; simplices are tagged to avoid collisions."""
    if X.truncation != Y.truncation:
        raise TruncationError("disjoint union needs equal truncations")
    N = X.truncation
    levels = {
        i: [SimplexId(i, (0, s.key)) for s in X.level(i)]
        + [SimplexId(i, (1, s.key)) for s in Y.level(i)]
        for i in range(N + 1)
    }

    def tagged_op(parent_op, i, j, s):
        tag, key = s.key
        obj = (X, Y)[tag]
        return SimplexId(i, (tag, parent_op(obj, j, SimplexId(s.level, key)).key))

    faces = {
        (i, j): {s: tagged_op(lambda o, jj, t: o.face(jj, t), i - 1, j, s) for s in levels[i]}
        for i in range(1, N + 1)
        for j in range(i + 1)
    }
    degeneracies = {
        (i, j): {s: tagged_op(lambda o, jj, t: o.degeneracy(jj, t), i + 1, j, s) for s in levels[i]}
        for i in range(N)
        for j in range(i + 1)
    }
    return TruncatedSimplicialSet(N, levels, faces, degeneracies, validate=False)


# -- morphisms ----------------------------------------------------------


class SimplicialMorphism:
    """A levelwise map commuting with all faces and degeneracies."""

    def __init__(self, source, target, components, validate=True):
        if source.truncation != target.truncation:
            raise TruncationError("morphism endpoints must share a truncation")
        self.source = source
        self.target = target
        self.components = {i: dict(components.get(i, {})) for i in range(source.truncation + 1)}
        self._key = None
        if validate:
            self.validate()

    def __call__(self, s: SimplexId) -> SimplexId:
        return self.components[s.level][s]

    def validate(self):
        N = self.source.truncation
        for i in range(N + 1):
            comp = self.components[i]
            if set(comp) != self.source.level_set(i):
                raise SimplicialError(f"morphism not total at level {i}")
            for s, t in comp.items():
                if not self.target.has(t) or t.level != i:
                    raise SimplicialError(f"morphism leaves the target at {s}")
        for i in range(1, N + 1):
            for j in range(i + 1):
                for s in self.source.level(i):
                    if self(self.source.face(j, s)) != self.target.face(j, self(s)):
                        raise SimplicialError(
                            f"morphism breaks face ({i},{j}) at {s}"
                        )
        for i in range(N):
            for j in range(i + 1):
                for s in self.source.level(i):
                    if self(self.source.degeneracy(j, s)) != self.target.degeneracy(j, self(s)):
                        raise SimplicialError(
                            f"morphism breaks degeneracy ({i},{j}) at {s}"
                        )
        return self

    def key(self):
        """Canonical hashable encoding of the component tables."""
        if self._key is None:
            self._key = tuple(
                tuple(sorted(((s.key, t.key) for s, t in self.components[i].items()),
                             key=lambda p: repr(p[0])))
                for i in range(self.source.truncation + 1)
            )
        return self._key

    def is_levelwise_bijection(self):
        for i in range(self.source.truncation + 1):
            images = set(self.components[i].values())
            if len(images) != len(self.components[i]) or images != self.target.level_set(i):
                return False
        return True

    def __eq__(self, other):
        return (
            isinstance(other, SimplicialMorphism)
            and self.source is other.source
            and self.target is other.target
            and self.key() == other.key()
        )

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"SimplicialMorphism({self.source!r} -> {self.target!r})"


def identity_morphism(X):
    return SimplicialMorphism(
        X, X, {i: {s: s for s in X.level(i)} for i in range(X.truncation + 1)}, validate=False
    )


def compose_morphisms(g, f):
    """g after f."""
    if f.target is not g.source and f.target.level(0) != g.source.level(0):
        raise SimplicialError("morphisms not composable")
    comps = {
        i: {s: g(t) for s, t in f.components[i].items()}
        for i in range(f.source.truncation + 1)
    }
    return SimplicialMorphism(f.source, g.target, comps, validate=False)


# -- morphism enumeration ------------------------------------------------


def hom_set(K, X, order_seed=None) -> tuple:
    """All simplicial morphisms K -> X.

    Images are assigned to nondegenerate simplices of K from the top level
    down; each placement forces the entire face lattice below it and the
    degenerate simplices above it, and inconsistent partial assignments are
    pruned as soon as they appear.  The result is returned sorted by a
    canonical encoding, so it does not depend on traversal order.

    ``order_seed`` shuffles the internal candidate order; it exists so tests
    can confirm the enumeration is order-independent.
    """
    if K.truncation != X.truncation:
        raise TruncationError("hom_set needs equal truncations")
    N = K.truncation
    nd = [s for i in range(N, -1, -1) for s in sorted(K.nondegenerate(i), key=_skey)]

    limit = _enumeration_limit
    if limit is not None:
        estimate = 1
        for i in range(N + 1):
            estimate *= max(1, len(X.level(i))) ** len(K.nondegenerate(i))

    rng = None
    if order_seed is not None:
        import random

        rng = random.Random(order_seed)

    assignment = {}
    trail = []
    nodes = 0
    results = []

    def degeneracy_preimage(eta, v):
        # find y with X.act(eta, y) == v, peeling elementary collapses
        if eta.is_identity:
            return v
        p = next(i for i in range(eta.domain) if eta.values[i] == eta.values[i + 1])
        inv = X._degeneracy_inv(v.level - 1, p)
        u = inv.get(v)
        if u is None:
            return None
        eta2 = MonotoneMap(eta.domain - 1, eta.codomain, eta.values[: p + 1] + eta.values[p + 2 :])
        return degeneracy_preimage(eta2, u)

    def get_image(t):
        eta, b = K.decompose(t)
        img = assignment.get(b)
        if img is None:
            return None
        return X._act(eta, img) if not eta.is_identity else img

    def assign(t, v):
        # record that t must map to v; returns False on conflict
        eta, b = K.decompose(t)
        if not eta.is_identity:
            y = degeneracy_preimage(eta, v)
            if y is None:
                return False
            t, v = b, y
        cur = assignment.get(t)
        if cur is not None:
            return cur == v
        assignment[t] = v
        trail.append(t)
        for j in range(t.level + 1) if t.level >= 1 else ():
            if not assign(K.face(j, t), X.face(j, v)):
                return False
        return True

    def candidates(s):
        known = []
        if s.level >= 1:
            for j in range(s.level + 1):
                img = get_image(K.face(j, s))
                if img is not None:
                    known.append((j, img))
        if not known:
            pool = list(X.level(s.level))
        else:
            j0, img0 = min(known, key=lambda p: len(X.face_index(s.level, p[0]).get(p[1], ())))
            pool = [
                x
                for x in X.face_index(s.level, j0).get(img0, ())
                if all(X.face(j, x) == img for j, img in known if j != j0)
            ]
            pool.sort(key=_skey)
        if rng is not None:
            rng.shuffle(pool)
        return pool

    def search(pos):
        nonlocal nodes
        while pos < len(nd) and nd[pos] in assignment:
            pos += 1
        if pos == len(nd):
            comps = {}
            for i in range(N + 1):
                comps[i] = {t: get_image(t) for t in K.level(i)}
            results.append(SimplicialMorphism(K, X, comps, validate=False))
            return
        s = nd[pos]
        for c in candidates(s):
            nodes += 1
            if limit is not None and nodes > limit:
                raise EnumerationLimitError(
                    f"hom-set enumeration exceeded {limit} steps "
                    f"(upper-bound estimate {estimate} assignments); "
                    f"raise HGK_MAX_ENUM to continue",
                    estimate=estimate,
                )
            mark = len(trail)
            ok = assign(s, c)
            if ok:
                search(pos + 1)
            while len(trail) > mark:
                del assignment[trail.pop()]
        return

    search(0)
    results.sort(key=lambda m: repr(m.key()))
    return tuple(results)


# -- coskeleta -----------------------------------------------------------


def coskeleton(X, m, N, validate=True) -> TruncatedSimplicialSet:
    """Freely and uniquely fill all simplices above level m, through level N.

    Levels up to m are reused verbatim from X; a level i > m holds the
    morphisms from the m-truncated i-simplex into the m-truncation of X,
    with operators given by precomposition.
    """
    if not 0 <= m <= X.truncation:
        raise TruncationError(f"coskeleton level {m} outside truncation {X.truncation}")
    Xm = truncate(X, m)
    levels = {i: list(X.level(i)) for i in range(min(m, N) + 1)}
    faces = {
        (i, j): dict(X._faces[(i, j)]) for i in range(1, min(m, N) + 1) for j in range(i + 1)
    }
    degeneracies = {
        (i, j): dict(X._degeneracies[(i, j)])
        for i in range(min(m, N))
        for j in range(i + 1)
    }
    deltas = {i: standard_simplex(i, m) for i in range(m + 1, N + 2)}
    tables = {}  # level -> {id: component dict}
    for i in range(m + 1, N + 1):
        morphs = hom_set(deltas[i], Xm)
        levels[i] = []
        tables[i] = {}
        for phi in morphs:
            sid = SimplexId(i, phi.key())
            levels[i].append(sid)
            tables[i][sid] = phi.components

    def precomposed_id(comp, g_values, target_level):
        # id of the morphism (simplex named by comp) composed with Delta(g)
        delta = deltas[target_level]
        new_comps = {
            l: {
                s: comp[l][SimplexId(l, tuple(g_values[v] for v in s.key))]
                for s in delta.level(l)
            }
            for l in range(m + 1)
        }
        return SimplexId(
            target_level, SimplicialMorphism(delta, Xm, new_comps, validate=False).key()
        )

    for i in range(m + 1, N + 1):
        for j in range(i + 1):
            dj = coface(j, i).values
            table = {}
            for sid in levels[i]:
                comp = tables[i][sid]
                if i - 1 > m:
                    table[sid] = precomposed_id(comp, dj, i - 1)
                else:
                    # evaluate at the face viewed as a level-m simplex
                    table[sid] = comp[m][SimplexId(m, dj)]
            faces[(i, j)] = table

    for i in range(m, N):
        for j in range(i + 1):
            sj = codegeneracy(j, i).values
            table = {}
            if i == m:
                delta_up = deltas[m + 1]
                for x in X.level(m):
                    comps = {
                        l: {
                            beta: Xm._act(
                                MonotoneMap(l, m, tuple(sj[v] for v in beta.key)), x
                            )
                            for beta in delta_up.level(l)
                        }
                        for l in range(m + 1)
                    }
                    table[x] = SimplexId(
                        m + 1, SimplicialMorphism(delta_up, Xm, comps, validate=False).key()
                    )
            else:
                for sid in levels[i]:
                    table[sid] = precomposed_id(tables[i][sid], sj, i + 1)
            degeneracies[(i, j)] = table

    return TruncatedSimplicialSet(N, levels, faces, degeneracies, validate=validate)


def coskeleton_comparison(X, m) -> SimplicialMorphism:
    """The canonical morphism from X to the coskeleton of its m-truncation.

    X is determined by its m-truncation exactly when this is a levelwise
    bijection on every stored level above m.
    """
    C = coskeleton(X, m, X.truncation, validate=False)
    Xm = truncate(X, m)
    comps = {i: {s: s for s in X.level(i)} for i in range(m + 1)}
    for i in range(m + 1, X.truncation + 1):
        delta_i = standard_simplex(i, m)
        comps[i] = {}
        for x in X.level(i):
            phi_comps = {
                l: {
                    beta: X._act(MonotoneMap(l, i, beta.key), x)
                    for beta in delta_i.level(l)
                }
                for l in range(m + 1)
            }
            comps[i][x] = SimplexId(
                i, SimplicialMorphism(delta_i, Xm, phi_comps, validate=False).key()
            )
    return SimplicialMorphism(X, C, comps)


# -- mapping spaces -------------------------------------------------------


def mapping_space(X, Y, upto) -> TruncatedSimplicialSet:
    """The simplicial hom: level n is the set of morphisms from the
    (n-simplex times X) into Y, with operators induced by the simplex factor."""
    if X.truncation != Y.truncation:
        raise TruncationError("mapping_space needs equal truncations")
    N = X.truncation
    sources = {n: product(standard_simplex(n, N), X) for n in range(upto + 1)}
    tables = {}
    levels = {}
    for n in range(upto + 1):
        morphs = hom_set(sources[n], Y)
        levels[n] = []
        tables[n] = {}
        for phi in morphs:
            sid = SimplexId(n, phi.key())
            levels[n].append(sid)
            tables[n][sid] = phi.components

    def induced(n, g_values, to_n):
        out = {}
        for sid in levels[n]:
            comp = tables[n][sid]
            new_comps = {}
            for l in range(N + 1):
                d = {}
                for s in sources[to_n].level(l):
                    bkey, xkey = s.key
                    moved = tuple(g_values[v] for v in bkey)
                    d[s] = comp[l][SimplexId(l, (moved, xkey))]
                new_comps[l] = d
            out[sid] = SimplexId(
                to_n, SimplicialMorphism(sources[to_n], Y, new_comps, validate=False).key()
            )
        return out

    faces = {}
    degeneracies = {}
    for n in range(1, upto + 1):
        for j in range(n + 1):
            faces[(n, j)] = induced(n, coface(j, n).values, n - 1)
    for n in range(upto):
        for j in range(n + 1):
            degeneracies[(n, j)] = induced(n, codegeneracy(j, n).values, n + 1)
    return TruncatedSimplicialSet(upto, levels, faces, degeneracies, validate=False)


def nondegenerate_decomposition(X, s: SimplexId):
    """The unique (collapse, nondegenerate base) pair producing ``s``."""
    if not X.has(s):
        raise SimplicialError(f"{s} is not a simplex of the object")
    return X.decompose(s)


def pi_zero(X):
    """Connected components of the vertex set under the edge relation."""
    parent = {v: v for v in X.level(0)}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    if X.truncation >= 1:
        for e in X.level(1):
            a, b = find(X.face(0, e)), find(X.face(1, e))
            if a != b:
                parent[a] = b
    comps = {}
    for v in X.level(0):
        comps.setdefault(find(v), []).append(v)
    return tuple(tuple(sorted(c, key=_skey)) for c in sorted(comps.values(), key=lambda c: _skey(c[0])))
