"""Finitely generated abelian groups, chain complexes, and both halves of
the correspondence between simplicial abelian groups and nonnegatively
graded chain complexes.

A group is stored in canonical form: a free rank plus a divisibility chain
of torsion invariants.  Generators are ordered free-first-then-torsion, and
every homomorphism is an integer matrix on those generators, so equality of
isomorphism classes and of maps is decidable by Smith reduction.

Normalization takes iterated kernels of the faces with positive index and
uses face 0 as the differential; denormalization rebuilds a simplicial
group from collapse-indexed copies of the chain groups.  The two are
mutually inverse, which the tests exhibit rather than assume.
"""

from dataclasses import dataclass

from .errors import SimplicialError, TruncationError
from .intlinalg import (
    IntMatrix,
    cokernel_invariants,
    kernel_basis,
    lattice_basis,
    smith_normal_form,
    solve_matrix,
)
from .matching import CheckFailure, CheckReport
from .simplex import (
    MonotoneMap,
    codegeneracy,
    coface,
    compose as compose_maps,
    epi_mono_factor,
    surjections,
)
from .ssets import build_sset


@dataclass(frozen=True)
class FGAbelianGroup:
    """Free rank plus torsion invariants d1 | d2 | ... (each >= 2).

    Elements are integer vectors over the generators, free coordinates
    first; torsion coordinates are read modulo their invariant.
    """

    rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise SimplicialError("negative rank")
        for d in self.torsion:
            if d < 2:
                raise SimplicialError(f"torsion invariant {d} < 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a != 0:
                raise SimplicialError(f"invariants {self.torsion} not a divisibility chain")

    @property
    def generators(self):
        return self.rank + len(self.torsion)

    @property
    def is_trivial(self):
        return self.generators == 0

    def order(self):
        """Number of elements, or None when infinite."""
        if self.rank:
            return None
        n = 1
        for d in self.torsion:
            n *= d
        return n

    def relations(self) -> IntMatrix:
        g = self.generators
        cols = []
        for i, d in enumerate(self.torsion):
            col = [0] * g
            col[self.rank + i] = d
            cols.append(tuple(col))
        return IntMatrix.from_columns(cols, g) if cols else IntMatrix.zeros(g, 0)

    def reduce(self, vector):
        if len(vector) != self.generators:
            raise SimplicialError("element has wrong length")
        head = tuple(int(v) for v in vector[: self.rank])
        tail = tuple(int(v) % d for v, d in zip(vector[self.rank :], self.torsion))
        return head + tail

    def zero(self):
        return (0,) * self.generators

    def elements(self):
        """All elements; only for finite groups."""
        if self.rank:
            raise SimplicialError("infinite group")
        from itertools import product as iproduct

        return [tuple(v) for v in iproduct(*(range(d) for d in self.torsion))]

    def __str__(self):
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " x ".join(parts) if parts else "0"


def from_moduli(rank, moduli) -> "FGAbelianGroup":
    """Canonical form of  Z^rank + sum of Z/m  for arbitrary moduli."""
    moduli = [int(m) for m in moduli]
    if any(m < 0 for m in moduli):
        raise SimplicialError("moduli must be nonnegative")
    rank += sum(1 for m in moduli if m == 0)
    keep = [m for m in moduli if m >= 2]
    if not keep:
        return FGAbelianGroup(rank, ())
    diag = IntMatrix.from_columns(
        [tuple(m if i == j else 0 for i in range(len(keep))) for j, m in enumerate(keep)],
        len(keep),
    )
    free_extra, torsion = cokernel_invariants(diag)
    return FGAbelianGroup(rank + free_extra, torsion)


class AbHom:
    """A homomorphism as an integer matrix on chosen generators."""

    def __init__(self, source: FGAbelianGroup, target: FGAbelianGroup, matrix: IntMatrix,
                 validate=True):
        self.source = source
        self.target = target
        self.matrix = matrix
        if matrix.shape != (target.generators, source.generators):
            raise SimplicialError(
                f"matrix shape {matrix.shape} does not match "
                f"{target.generators}x{source.generators}"
            )
        if validate:
            self.validate()

    @classmethod
    def zero(cls, source, target):
        return cls(source, target, IntMatrix.zeros(target.generators, source.generators),
                   validate=False)

    @classmethod
    def identity(cls, group):
        return cls(group, group, IntMatrix.identity(group.generators), validate=False)

    def validate(self):
        # relations must be respected: d * column lands in the target relations
        for i, d in enumerate(self.source.torsion):
            col = self.matrix.column(self.source.rank + i)
            if not self.target_annihilates(tuple(d * c for c in col)):
                raise SimplicialError(
                    f"map not well defined on torsion generator {i} (order {d})"
                )
        return self

    def target_annihilates(self, vector):
        reduced = self.target.reduce(vector)
        return all(v == 0 for v in reduced)

    def apply(self, element):
        return self.target.reduce(self.matrix.apply(self.source.reduce(element)))

    def then(self, other: "AbHom") -> "AbHom":
        """other after self."""
        if other.source != self.target:
            raise SimplicialError("homs not composable")
        return AbHom(self.source, other.target, other.matrix @ self.matrix, validate=False)

    def __add__(self, other):
        return AbHom(self.source, self.target, self.matrix + other.matrix, validate=False)

    def scale(self, k):
        return AbHom(self.source, self.target, self.matrix.scale(k), validate=False)

    def equals(self, other) -> bool:
        """Equality as maps, i.e. modulo the target relations."""
        if self.source != other.source or self.target != other.target:
            return False
        diff = self.matrix + other.matrix.scale(-1)
        return all(
            self.target_annihilates(diff.column(j)) for j in range(diff.ncols)
        )

    @property
    def is_zero(self):
        return all(self.target_annihilates(self.matrix.column(j)) for j in range(self.matrix.ncols))

    def __repr__(self):
        return f"AbHom({self.source} -> {self.target})"


def hom_compose(g: AbHom, f: AbHom) -> AbHom:
    """g after f."""
    return f.then(g)


def direct_sum(groups):
    """Canonical direct sum with injections and projections.

    Returns ``(G, injections, projections)``; the change of basis that puts
    the concatenated presentation into canonical form is applied to both
    families, so the round trips proj . inj = id hold on the nose.
    """
    groups = list(groups)
    offsets = []
    g_total = 0
    for G in groups:
        offsets.append(g_total)
        g_total += G.generators
    rel_cols = []
    for G, off in zip(groups, offsets):
        R = G.relations()
        for j in range(R.ncols):
            col = [0] * g_total
            for i, v in enumerate(R.column(j)):
                col[off + i] = v
            rel_cols.append(tuple(col))
    D = IntMatrix.from_columns(rel_cols, g_total) if rel_cols else IntMatrix.zeros(g_total, 0)
    nf = smith_normal_form(D)
    diag = list(nf.diagonal) + [0] * (g_total - len(nf.diagonal))
    free_idx = [i for i in range(g_total) if diag[i] == 0]
    tors_idx = [i for i in range(g_total) if diag[i] > 1]
    total = FGAbelianGroup(len(free_idx), tuple(diag[i] for i in tors_idx))
    kept = free_idx + tors_idx

    injections = []
    projections = []
    for G, off in zip(groups, offsets):
        inj_cols = []
        for l in range(G.generators):
            u_col = nf.u.column(off + l)
            inj_cols.append(tuple(u_col[c] for c in kept))
        inj = AbHom(
            G,
            total,
            IntMatrix.from_columns(inj_cols, total.generators)
            if inj_cols
            else IntMatrix.zeros(total.generators, 0),
        )
        proj_cols = []
        for c in kept:
            v = nf.uinv.column(c)
            proj_cols.append(tuple(v[off + i] for i in range(G.generators)))
        proj = AbHom(
            total,
            G,
            IntMatrix.from_columns(proj_cols, G.generators)
            if proj_cols
            else IntMatrix.zeros(G.generators, 0),
        )
        injections.append(inj)
        projections.append(proj)
    return total, injections, projections


def kernel_subgroup(h: AbHom):
    """The kernel as an abstract group with its inclusion into the source."""
    src, tgt = h.source, h.target
    block = h.matrix.hstack(tgt.relations())
    span_cols = []
    kb = kernel_basis(block)
    for j in range(kb.ncols):
        span_cols.append(kb.column(j)[: src.generators])
    span = (
        IntMatrix.from_columns(span_cols, src.generators)
        if span_cols
        else IntMatrix.zeros(src.generators, 0)
    )
    basis = lattice_basis(span)  # src.generators x r
    r = basis.ncols
    rel = solve_matrix(basis, src.relations()) if r else IntMatrix.zeros(0, src.relations().ncols)
    if rel is None:
        raise SimplicialError("internal error: source relations escape the kernel lattice")
    nf = smith_normal_form(rel)
    diag = list(nf.diagonal) + [0] * (r - len(nf.diagonal))
    free_idx = [i for i in range(r) if diag[i] == 0]
    tors_idx = [i for i in range(r) if diag[i] > 1]
    K = FGAbelianGroup(len(free_idx), tuple(diag[i] for i in tors_idx))
    kept = free_idx + tors_idx
    incl_cols = [basis.apply(nf.uinv.column(c)) for c in kept]
    incl = AbHom(
        K,
        src,
        IntMatrix.from_columns(incl_cols, src.generators)
        if incl_cols
        else IntMatrix.zeros(src.generators, 0),
    )
    return K, incl


def cokernel(h: AbHom) -> FGAbelianGroup:
    free, torsion = cokernel_invariants(h.matrix.hstack(h.target.relations()))
    return FGAbelianGroup(free, torsion)


def is_isomorphism(h: AbHom) -> bool:
    K, _ = kernel_subgroup(h)
    return K.is_trivial and cokernel(h).is_trivial


def factor_through(incl: AbHom, h: AbHom) -> AbHom:
    """The map P with incl . P = h, when the image of h lies in the subgroup."""
    if incl.target != h.target:
        raise SimplicialError("factorization endpoints do not match")
    stacked = incl.matrix.hstack(h.target.relations())
    sol = solve_matrix(stacked, h.matrix)
    if sol is None:
        raise SimplicialError("image does not lie in the subgroup")
    rows = [sol.rows[i] for i in range(incl.source.generators)]
    return AbHom(h.source, incl.source, IntMatrix(rows, sol.ncols))


# -- chain complexes -------------------------------------------------------


class ChainComplex:
    """A bounded complex; ``maps[i]`` connects degrees i+1 and i.

    With ``cochain=False`` the maps run downward (degree i+1 to i); with
    ``cochain=True`` they run upward.  Consecutive maps compose to zero.
    """

    def __init__(self, groups, maps, cochain=False, validate=True):
        self.groups = tuple(groups)
        self.maps = tuple(maps)
        self.cochain = cochain
        if len(self.maps) != max(0, len(self.groups) - 1):
            raise SimplicialError("need exactly one map between adjacent degrees")
        for i, h in enumerate(self.maps):
            lower, upper = self.groups[i], self.groups[i + 1]
            want = (lower, upper) if cochain else (upper, lower)
            if (h.source, h.target) != want:
                raise SimplicialError(f"map {i} has endpoints {h.source}->{h.target}")
        if validate:
            self.validate()

    @property
    def top(self):
        return len(self.groups) - 1

    @classmethod
    def concentrated(cls, group, degree):
        """The complex with one group placed in the given degree."""
        groups = [FGAbelianGroup(0)] * degree + [group]
        maps = []
        for i in range(degree):
            maps.append(AbHom.zero(groups[i + 1], groups[i]))
        return cls(groups, maps, cochain=False, validate=False)

    def validate(self):
        for i in range(len(self.maps) - 1):
            if self.cochain:
                comp = self.maps[i].then(self.maps[i + 1])
            else:
                comp = self.maps[i + 1].then(self.maps[i])
            if not comp.is_zero:
                raise SimplicialError(f"maps {i} and {i + 1} do not compose to zero")
        return self

    def incoming(self, k) -> AbHom | None:
        """The map whose image sits inside degree k."""
        if self.cochain:
            return self.maps[k - 1] if k >= 1 else None
        return self.maps[k] if k <= self.top - 1 else None

    def outgoing(self, k) -> AbHom | None:
        if self.cochain:
            return self.maps[k] if k <= self.top - 1 else None
        return self.maps[k - 1] if k >= 1 else None

    def __repr__(self):
        arrow = "->" if self.cochain else "<-"
        return f"ChainComplex({f' {arrow} '.join(str(g) for g in self.groups)})"


def homology(C: ChainComplex):
    """Invariant factors of kernel/image at each degree, via Smith forms."""
    out = []
    for k in range(len(C.groups)):
        G = C.groups[k]
        h_out = C.outgoing(k)
        if h_out is None:
            cycles = IntMatrix.identity(G.generators)
        else:
            block = h_out.matrix.hstack(h_out.target.relations())
            kb = kernel_basis(block)
            span_cols = [kb.column(j)[: G.generators] for j in range(kb.ncols)]
            span = (
                IntMatrix.from_columns(span_cols, G.generators)
                if span_cols
                else IntMatrix.zeros(G.generators, 0)
            )
            cycles = lattice_basis(span)
        r = cycles.ncols
        h_in = C.incoming(k)
        boundary_cols = h_in.matrix if h_in is not None else IntMatrix.zeros(G.generators, 0)
        stacked = boundary_cols.hstack(G.relations())
        if r == 0:
            out.append(FGAbelianGroup(0))
            continue
        Y = solve_matrix(cycles, stacked)
        if Y is None:
            raise SimplicialError("boundaries escape the cycle lattice; the complex is corrupt")
        free, torsion = cokernel_invariants(Y)
        out.append(FGAbelianGroup(free, torsion))
    return out


# -- simplicial abelian groups ---------------------------------------------


class SimplicialAbelianGroup:
    """Levelwise finitely generated abelian groups with operator matrices."""

    def __init__(self, truncation, groups, faces, degeneracies, validate=True):
        self.truncation = truncation
        self.groups = tuple(groups)
        if len(self.groups) != truncation + 1:
            raise SimplicialError("need one group per level")
        self.faces = dict(faces)
        self.degeneracies = dict(degeneracies)
        if validate:
            self.validate()

    def group(self, i) -> FGAbelianGroup:
        return self.groups[i]

    def face(self, i, j) -> AbHom:
        return self.faces[(i, j)]

    def degeneracy(self, i, j) -> AbHom:
        return self.degeneracies[(i, j)]

    def operator(self, f) -> AbHom:
        """Contravariant action of an arbitrary simplex-category arrow,
        as a homomorphism from level f.codomain to level f.domain."""
        if f.codomain > self.truncation or f.domain > self.truncation:
            raise TruncationError("operator reaches outside the stored levels")
        if f.is_identity:
            return AbHom.identity(self.groups[f.domain])
        if not f.is_surjective:
            image = set(f.values)
            a = max(v for v in range(f.codomain + 1) if v not in image)
            f2 = MonotoneMap(f.domain, f.codomain - 1,
                             tuple(v if v < a else v - 1 for v in f.values))
            return self.face(f.codomain, a).then(self.operator(f2))
        p = next(i for i in range(f.domain) if f.values[i] == f.values[i + 1])
        f2 = MonotoneMap(f.domain - 1, f.codomain, f.values[: p + 1] + f.values[p + 2 :])
        return self.operator(f2).then(self.degeneracy(f.domain - 1, p))

    def validate(self):
        N = self.truncation
        for i in range(1, N + 1):
            for j in range(i + 1):
                h = self.faces.get((i, j))
                if h is None or h.source != self.groups[i] or h.target != self.groups[i - 1]:
                    raise SimplicialError(f"face ({i},{j}) missing or mistyped")
                h.validate()
        for i in range(N):
            for j in range(i + 1):
                h = self.degeneracies.get((i, j))
                if h is None or h.source != self.groups[i] or h.target != self.groups[i + 1]:
                    raise SimplicialError(f"degeneracy ({i},{j}) missing or mistyped")
                h.validate()
        for i in range(2, N + 1):
            for j in range(i + 1):
                for k in range(j):
                    lhs = self.face(i, j).then(self.face(i - 1, k))
                    rhs = self.face(i, k).then(self.face(i - 1, j - 1))
                    if not lhs.equals(rhs):
                        raise SimplicialError(f"face identity ({k},{j}) fails at level {i}")
        for i in range(N - 1):
            for j in range(i + 1):
                for k in range(j + 1):
                    lhs = self.degeneracy(i, k).then(self.degeneracy(i + 1, j + 1))
                    rhs = self.degeneracy(i, j).then(self.degeneracy(i + 1, k))
                    if not lhs.equals(rhs):
                        raise SimplicialError(f"degeneracy identity ({k},{j}) fails at level {i}")
        for i in range(N):
            for j in range(i + 1):
                sj = self.degeneracy(i, j)
                for k in range(i + 2):
                    got = sj.then(self.face(i + 1, k))
                    if k == j or k == j + 1:
                        expect = AbHom.identity(self.groups[i])
                    elif k < j:
                        expect = self.face(i, k).then(self.degeneracy(i - 1, j - 1))
                    else:
                        expect = self.face(i, k - 1).then(self.degeneracy(i - 1, j))
                    if not got.equals(expect):
                        raise SimplicialError(f"mixed identity (face {k}, s_{j}) fails at level {i}")
        return self


def constant_simplicial_group(A: FGAbelianGroup, N) -> SimplicialAbelianGroup:
    ident = AbHom.identity(A)
    return SimplicialAbelianGroup(
        N,
        [A] * (N + 1),
        {(i, j): ident for i in range(1, N + 1) for j in range(i + 1)},
        {(i, j): ident for i in range(N) for j in range(i + 1)},
        validate=False,
    )


def unnormalized_complex(A: SimplicialAbelianGroup) -> ChainComplex:
    """The alternating-sum differential on the levels themselves."""
    maps = []
    for i in range(1, A.truncation + 1):
        d = AbHom.zero(A.groups[i], A.groups[i - 1])
        for j in range(i + 1):
            term = A.face(i, j)
            d = d + (term if j % 2 == 0 else term.scale(-1))
        maps.append(d)
    return ChainComplex(A.groups, maps, cochain=False)


def normalized_embedding(A: SimplicialAbelianGroup):
    """The normalized complex together with its levelwise inclusions."""
    groups = [A.groups[0]]
    inclusions = [AbHom.identity(A.groups[0])]
    for n in range(1, A.truncation + 1):
        K = A.groups[n]
        incl = AbHom.identity(K)
        for j in range(1, n + 1):
            h = incl.then(A.face(n, j))
            K, deeper = kernel_subgroup(h)
            incl = deeper.then(incl)
        groups.append(K)
        inclusions.append(incl)
    maps = []
    for n in range(1, A.truncation + 1):
        d = inclusions[n].then(A.face(n, 0))
        maps.append(factor_through(inclusions[n - 1], d))
    return ChainComplex(groups, maps, cochain=False), inclusions


def normalized_complex(A: SimplicialAbelianGroup) -> ChainComplex:
    """Intersections of the kernels of the positive faces, with face 0 as
    the differential."""
    return normalized_embedding(A)[0]


def denormalize(C: ChainComplex, N) -> SimplicialAbelianGroup:
    """Rebuild a simplicial group from a chain complex in degrees >= 0.

    Level n is one copy of the degree-k chain group for every collapse map
    from [n] onto [k]; an operator sends the copy at eta to the copy at the
    collapse part of (eta after the operator), through the identity when
    nothing is omitted, through the differential when the omitted vertex
    is 0, and through zero otherwise.
    """
    if C.cochain:
        raise SimplicialError("denormalization expects a downward complex")
    top = C.top
    index = {}
    summands = {}
    for n in range(N + 1):
        etas = []
        for k in range(min(n, top) + 1):
            etas.extend(surjections(n, k))
        etas.sort(key=lambda e: (e.codomain, e.values))
        index[n] = etas
        summands[n] = direct_sum([C.groups[e.codomain] for e in etas])

    def component(mono):
        # the chain-level map attached to the injective part of a factorization
        k = mono.codomain
        if mono.is_identity:
            return AbHom.identity(C.groups[k])
        if mono == coface(0, k):
            return C.maps[k - 1]
        return None

    def operator(n, alpha, target_level):
        total_n, _, projs = summands[n]
        total_t, injs, _ = summands[target_level]
        positions = {e: i for i, e in enumerate(index[target_level])}
        out = AbHom.zero(total_n, total_t)
        for pos, eta in enumerate(index[n]):
            epi, mono = epi_mono_factor(compose_maps(eta, alpha))
            comp = component(mono)
            if comp is None:
                continue
            piece = projs[pos].then(comp).then(injs[positions[epi]])
            out = out + piece
        return out

    groups = [summands[n][0] for n in range(N + 1)]
    faces = {}
    degeneracies = {}
    for n in range(1, N + 1):
        for j in range(n + 1):
            faces[(n, j)] = operator(n, coface(j, n), n - 1)
    for n in range(N):
        for j in range(n + 1):
            degeneracies[(n, j)] = operator(n, codegeneracy(j, n), n + 1)
    return SimplicialAbelianGroup(N, groups, faces, degeneracies)


def em_space(A: FGAbelianGroup, n, N=None) -> SimplicialAbelianGroup:
    """The simplicial group freely generated by one copy of A at level n.

    Level m is a sum of binomial(m, n) copies of A, one per collapse of
    [m] onto [n]."""
    if n < 0:
        raise SimplicialError("degree must be nonnegative")
    if N is None:
        N = n + 2
    return denormalize(ChainComplex.concentrated(A, n), N)


def homotopy_groups(A: SimplicialAbelianGroup):
    """Homology of the normalized complex, one group per stored level."""
    return homology(normalized_complex(A))


def is_abelian_hypergroupoid(A: SimplicialAbelianGroup, n) -> CheckReport:
    """The normalized complex vanishes above degree n.

    Under the correspondence with chain complexes this is exactly the
    unique-horn-filling condition above level n for the underlying object.
    """
    if A.truncation < n + 2:
        raise TruncationError(
            f"need levels through {n + 2} but only {A.truncation} are stored"
        )
    N = normalized_complex(A)
    failures = []
    stats = []
    for m in range(len(N.groups)):
        stats.append((("normalized-degree", m), str(N.groups[m])))
        if m > n and not N.groups[m].is_trivial:
            failures.append(
                CheckFailure(
                    m, None, "nonvanishing-normalization", N.groups[m],
                    f"normalized part at degree {m} is {N.groups[m]}, not 0",
                )
            )
    return CheckReport(not failures, tuple(failures), tuple(stats))


def underlying_sset(A: SimplicialAbelianGroup):
    """Forget the group structure; levels must be finite."""
    for i, G in enumerate(A.groups):
        if G.order() is None:
            raise SimplicialError(f"level {i} is infinite; no underlying simplicial set")
    return build_sset(
        A.truncation,
        lambda i: A.groups[i].elements(),
        lambda i, j, key: A.face(i, j).apply(key),
        lambda i, j, key: A.degeneracy(i, j).apply(key),
        validate=True,
    )
