from itertools import product as iproduct
from math import comb

import pytest

from hypergroupoids.errors import EnumerationLimitError, TruncationError
from hypergroupoids.simplex import MonotoneMap, monotone_maps, surjections
from hypergroupoids.ssets import (
    SimplexId,
    boundary,
    constant_simplicial_set,
    coskeleton,
    coskeleton_comparison,
    disjoint_union,
    hom_set,
    horn,
    mapping_space,
    nondegenerate_decomposition,
    pi_zero,
    product,
    set_enumeration_limit,
    standard_simplex,
    truncate,
)


def brute_hom_count(K, X):
    """Unpruned oracle: try every levelwise function and keep the ones that
    commute with all operators.  Exponential; only for tiny inputs."""
    slots = []
    choices = []
    for i in range(K.truncation + 1):
        for s in K.level(i):
            slots.append(s)
            choices.append(list(X.level(i)))
    count = 0
    for combo in iproduct(*choices) if slots else [()]:
        phi = dict(zip(slots, combo))
        ok = True
        for i in range(1, K.truncation + 1):
            for j in range(i + 1):
                for s in K.level(i):
                    if phi[K.face(j, s)] != X.face(j, phi[s]):
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            for i in range(K.truncation):
                for j in range(i + 1):
                    for s in K.level(i):
                        if phi[K.degeneracy(j, s)] != X.degeneracy(j, phi[s]):
                            ok = False
                            break
                    if not ok:
                        break
                if not ok:
                    break
        count += ok
    return count


def two_point_coskeleton(N):
    return coskeleton(constant_simplicial_set(("p", "q"), 0), 0, N, validate=False)


def test_standard_simplex_counts():
    X = standard_simplex(0, 3)
    assert [len(X.level(i)) for i in range(4)] == [1, 1, 1, 1]
    X = standard_simplex(1, 1)
    assert [len(X.level(i)) for i in range(2)] == [2, 3]
    X = standard_simplex(2, 1)
    assert len(X.level(1)) == 6
    for n in range(4):
        X = standard_simplex(n, 3)
        for i in range(4):
            assert len(X.level(i)) == comb(n + i + 1, i + 1)
        X.validate()


def test_boundary():
    X = boundary(0, 2)
    assert all(len(X.level(i)) == 0 for i in range(3))
    X = boundary(1, 1)
    assert len(X.level(0)) == 2
    assert len(X.level(1)) == 2
    assert len(X.nondegenerate(1)) == 0
    X = boundary(2, 2).validate()
    assert len(X.nondegenerate(2)) == 0
    assert len(X.nondegenerate(1)) == 3


def test_horn():
    X = horn(1, 0, 1)
    assert len(X.level(0)) == 1
    assert X.level(0)[0].key == (0,)
    L = horn(2, 1, 2).validate()
    keys1 = {s.key for s in L.level(1)}
    assert (1, 2) in keys1 and (0, 1) in keys1 and (0, 2) not in keys1
    with pytest.raises(Exception):
        horn(0, 0, 1)
    with pytest.raises(Exception):
        horn(2, 3, 2)


def test_containments():
    for n in range(1, 5):
        D = standard_simplex(n, n)
        B = boundary(n, n)
        for k in range(n + 1):
            H = horn(n, k, n)
            for i in range(n + 1):
                hk = {s.key for s in H.level(i)}
                bk = {s.key for s in B.level(i)}
                dk = {s.key for s in D.level(i)}
                assert hk <= bk <= dk


def test_act_is_precomposition_on_standard_simplex():
    X = standard_simplex(2, 3)
    top = SimplexId(2, (0, 1, 2))
    for l in range(4):
        for f in monotone_maps(l, 2):
            assert X.act(f, top) == SimplexId(l, f.values)


def test_decomposition_against_exhaustive_search():
    X = two_point_coskeleton(2)
    X.validate()
    for i in range(3):
        for s in X.level(i):
            epi, base = nondegenerate_decomposition(X, s)
            assert base in X.nondegenerate(base.level)
            assert X.act(epi, base) == s
            # the brute-force search finds exactly this pair
            found = []
            for k in range(i + 1):
                for eta in surjections(i, k):
                    for b in X.nondegenerate(k):
                        if X.act(eta, b) == s:
                            found.append((eta, b))
            assert found == [(epi, base)]


def test_hom_set_against_unpruned_oracle():
    pairs = [
        (boundary(1, 1), two_point_coskeleton(1)),
        (horn(2, 1, 2), constant_simplicial_set(("a", "b"), 2)),
        (standard_simplex(1, 2), constant_simplicial_set(("a", "b"), 2)),
        (boundary(2, 2), constant_simplicial_set(("a",), 2)),
        (boundary(0, 1), two_point_coskeleton(1)),
    ]
    for K, X in pairs:
        assert len(hom_set(K, X)) == brute_hom_count(K, X)


def test_hom_set_yoneda():
    X = two_point_coskeleton(3)
    for n in range(4):
        morphs = hom_set(standard_simplex(n, 3), X)
        assert len(morphs) == len(X.level(n))
        # the correspondence evaluates at the top cell
        tops = {phi(SimplexId(n, tuple(range(n + 1)))) for phi in morphs}
        assert tops == X.level_set(n)


def test_hom_set_trivial_cases():
    X = two_point_coskeleton(2)
    assert len(hom_set(boundary(0, 2), X)) == 1
    point = standard_simplex(0, 1)
    assert len(hom_set(standard_simplex(1, 1), point)) == 1


def test_hom_set_deterministic_across_orders():
    K = horn(2, 1, 2)
    X = two_point_coskeleton(2)
    base = hom_set(K, X)
    for seed in (1, 2, 3):
        shuffled = hom_set(K, X, order_seed=seed)
        assert [m.key() for m in shuffled] == [m.key() for m in base]


def test_enumeration_limit():
    K = standard_simplex(1, 2)
    X = two_point_coskeleton(2)
    set_enumeration_limit(1)
    try:
        with pytest.raises(EnumerationLimitError):
            hom_set(K, X)
    finally:
        set_enumeration_limit(None)
    assert len(hom_set(K, X)) > 0


def test_morphism_validation():
    X = two_point_coskeleton(1)
    for phi in hom_set(standard_simplex(1, 1), X):
        phi.validate()


def test_coskeleton_point():
    P = constant_simplicial_set(("x",), 0)
    C = coskeleton(P, 0, 3)
    assert [len(C.level(i)) for i in range(4)] == [1, 1, 1, 1]
    C.validate()


def test_coskeleton_two_point_counts():
    C = two_point_coskeleton(3)
    C.validate()
    assert [len(C.level(i)) for i in range(4)] == [2, 4, 8, 16]


def test_coskeleton_idempotent():
    C = two_point_coskeleton(3)
    C2 = coskeleton(C, 0, 3)
    for i in range(4):
        assert C2.level(i) == C.level(i)
    unit = coskeleton_comparison(C, 0)
    assert unit.is_levelwise_bijection()


def test_coskeleton_identity_at_full_level():
    X = standard_simplex(0, 2)
    C = coskeleton(X, 2, 2)
    for i in range(3):
        assert C.level(i) == X.level(i)


def test_coskeleton_unit_detects_non_coskeletal():
    # the boundary of the 2-simplex is not 1-coskeletal at level 2:
    # the filler triangle exists in the coskeleton but not in the boundary
    B = boundary(2, 2)
    unit = coskeleton_comparison(B, 1)
    assert not unit.is_levelwise_bijection()


def test_product_counts_and_symmetry():
    d1 = standard_simplex(1, 1)
    P = product(d1, d1)
    P.validate()
    assert len(P.level(1)) == 9
    X = two_point_coskeleton(2)
    PX = product(standard_simplex(0, 2), X)
    for i in range(3):
        assert len(PX.level(i)) == len(X.level(i))
    Q = product(X, standard_simplex(0, 2))
    for i in range(3):
        assert len(Q.level(i)) == len(PX.level(i))


def test_mapping_space():
    X = two_point_coskeleton(2)
    point = standard_simplex(0, 2)
    M = mapping_space(point, X, 2)
    assert [len(M.level(i)) for i in range(3)] == [2, 4, 8]
    M.validate()
    M2 = mapping_space(X, point, 2)
    assert [len(M2.level(i)) for i in range(3)] == [1, 1, 1]


def test_disjoint_union():
    A = constant_simplicial_set(("a",), 1)
    B = constant_simplicial_set(("b", "c"), 1)
    U = disjoint_union(A, B).validate()
    assert len(U.level(0)) == 3
    assert len(pi_zero(U)) == 3


def test_pi_zero():
    assert len(pi_zero(constant_simplicial_set(("a", "b"), 1))) == 2
    assert len(pi_zero(two_point_coskeleton(1))) == 1
    assert len(pi_zero(boundary(0, 1))) == 0


def test_truncate_errors():
    X = standard_simplex(1, 2)
    T = truncate(X, 1)
    assert T.truncation == 1
    with pytest.raises(TruncationError):
        truncate(X, 5)
