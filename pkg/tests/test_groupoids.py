import pytest

from corpus import cyclic_group, groupoid_corpus, symmetric_group_3, two_point_coskeleton
from hypergroupoids.errors import CocycleError, NotHypergroupoidError, SimplicialError
from hypergroupoids.groupoids import (
    LocalSystemData,
    constant_local_system,
    descent_data,
    discrete_groupoid,
    from_group_table,
    fundamental_groupoid,
    indiscrete_groupoid,
    local_system_total,
    nerve,
    nerve_recovery_morphism,
)
from hypergroupoids.matching import is_cartesian, is_n_hypergroupoid
from hypergroupoids.simplex import MonotoneMap
from hypergroupoids.ssets import SimplexId, boundary, pi_zero


def test_from_group_table_rejects_nongroup():
    with pytest.raises(SimplicialError):
        from_group_table([0, 1], lambda a, b: 0)


def test_nerve_level_counts():
    X = nerve(cyclic_group(2), 3)
    assert [len(X.level(i)) for i in range(4)] == [1, 2, 4, 8]
    Y = nerve(symmetric_group_3(), 3)
    assert [len(Y.level(i)) for i in range(4)] == [1, 6, 36, 216]


def test_nerve_discrete_is_constant():
    X = nerve(discrete_groupoid("abc"), 3)
    for i in range(4):
        assert len(X.level(i)) == 3
    assert len(X.nondegenerate(1)) == 0


def test_nerve_indiscrete_matches_zero_coskeleton():
    S = ("p", "q")
    X = nerve(indiscrete_groupoid(S), 3)
    C = two_point_coskeleton(3)
    for i in range(4):
        assert len(X.level(i)) == len(C.level(i)) == 2 ** (i + 1)


def test_fundamental_groupoid_recovers_group():
    for name, G, _ in groupoid_corpus():
        X = nerve(G, 3)
        R = fundamental_groupoid(X)
        # objects and arrows of the recovered groupoid wrap the originals
        obj_map = {x: x.key for x in R.objects}
        arr_map = {a: a.key[0] for a in R.arrows}
        assert R.verify_isomorphism(G, obj_map, arr_map), name


def test_fundamental_groupoid_of_indiscrete_shape():
    X = two_point_coskeleton(3)
    R = fundamental_groupoid(X)
    S = sorted(x.key for x in R.objects)
    I = indiscrete_groupoid(S)
    obj_map = {x: x.key for x in R.objects}
    # an edge of the zero-coskeleton is determined by its two vertices
    arr_map = {a: (R.source[a].key, R.target[a].key) for a in R.arrows}
    assert R.verify_isomorphism(I, obj_map, arr_map)


def test_fundamental_groupoid_constant_is_discrete():
    from hypergroupoids.ssets import constant_simplicial_set

    X = constant_simplicial_set(("a", "b"), 3)
    R = fundamental_groupoid(X)
    assert R.is_discrete()
    assert len(R.objects) == 2


def test_fundamental_groupoid_refuses_non_hypergroupoid():
    with pytest.raises(NotHypergroupoidError):
        fundamental_groupoid(boundary(2, 3))


def test_nerve_recovery_roundtrip():
    for name, G, _ in groupoid_corpus():
        X = nerve(G, 3)
        comparison = nerve_recovery_morphism(X)
        assert comparison.is_levelwise_bijection(), name
    comparison = nerve_recovery_morphism(two_point_coskeleton(3))
    assert comparison.is_levelwise_bijection()


def test_pi_invariants_of_nerve():
    for name, G, _ in groupoid_corpus():
        X = nerve(G, 3)
        assert len(pi_zero(X)) == len(G.connected_components()), name
        R = fundamental_groupoid(X)
        for x in R.objects:
            assert len(R.hom(x, x)) == len(G.hom(x.key, x.key))


def test_constant_local_system_gives_projection():
    Y = nerve(cyclic_group(2), 2)
    data = constant_local_system(Y, ("u", "v"))
    f = local_system_total(data)
    assert is_cartesian(f).passed
    for i in range(3):
        assert len(f.source.level(i)) == 2 * len(Y.level(i))


def test_double_cover_total_space():
    # fiber {0, 1} over the one-object base, the generator swaps the sheets
    Y = nerve(cyclic_group(2), 3)
    star = Y.level(0)[0]
    fibers = {star: frozenset({0, 1})}

    def transition(z):
        g = z.key[0]
        return {a: (a + g) % 2 for a in (0, 1)}

    data = LocalSystemData(Y, fibers, {z: transition(z) for z in Y.level(1)})
    f = local_system_total(data)
    assert is_cartesian(f).passed
    # the total object is the indiscrete shape on two sheets
    for i in range(4):
        assert len(f.source.level(i)) == 2 ** (i + 1)
    assert is_n_hypergroupoid(f.source, 1).passed
    assert not is_n_hypergroupoid(f.source, 0).passed
    assert len(pi_zero(f.source)) == 1


def test_broken_cocycle_reports_simplex():
    Y = nerve(cyclic_group(3), 2)
    star = Y.level(0)[0]
    fibers = {star: frozenset({0, 1, 2})}
    transitions = {}
    for z in Y.level(1):
        g = z.key[0]
        # deliberately twist one generator the wrong way
        shift = g if g != 2 else 1
        transitions[z] = {a: (a + shift) % 3 for a in (0, 1, 2)}
    with pytest.raises(CocycleError) as err:
        LocalSystemData(Y, fibers, transitions)
    assert err.value.simplex is not None
    assert err.value.simplex.level == 2


def test_descent_roundtrip():
    Y = nerve(cyclic_group(2), 3)
    star = Y.level(0)[0]
    data = LocalSystemData(
        Y,
        {star: frozenset({0, 1})},
        {z: {a: (a + z.key[0]) % 2 for a in (0, 1)} for z in Y.level(1)},
    )
    f = local_system_total(data)
    rt = descent_data(f)
    # fibers of the roundtrip wrap the original fiber elements
    for y in Y.level(0):
        assert rt.fibers[y] == frozenset(
            SimplexId(0, (y.key, a)) for a in data.fibers[y]
        )
    for z in Y.level(1):
        src_vertex, dst_vertex = Y.face(0, z), Y.face(1, z)
        for a in data.fibers[src_vertex]:
            got = rt.transitions[z][SimplexId(0, (src_vertex.key, a))]
            assert got == SimplexId(0, (dst_vertex.key, data.transitions[z][a]))


def test_descent_data_refuses_non_cartesian():
    X = nerve(cyclic_group(2), 2)
    from hypergroupoids.ssets import SimplicialMorphism, standard_simplex

    P = standard_simplex(0, 2)
    to_point = SimplicialMorphism(
        X, P, {i: {s: P.level(i)[0] for s in X.level(i)} for i in range(3)}
    )
    with pytest.raises(SimplicialError):
        descent_data(to_point)


def test_total_space_roundtrip_against_original():
    # rebuilding the local system and taking its total space gives back the
    # original morphism up to the canonical relabeling over the base
    Y = nerve(cyclic_group(2), 2)
    data = constant_local_system(Y, ("u", "v"))
    f = local_system_total(data)
    f2 = local_system_total(descent_data(f))
    lookup = {}
    for n in range(3):
        for x in f.source.level(n):
            first = f.source.act(MonotoneMap(0, n, (0,)), x) if n else x
            lookup[(f(x), first)] = x
    for n in range(3):
        for x2 in f2.source.level(n):
            w, a = x2.key
            # a is itself a vertex id of the original total space
            assert lookup[(SimplexId(n, w), a)] is not None
