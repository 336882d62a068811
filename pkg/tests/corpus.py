"""Shared corpus of groupoids and simplicial objects used across the suite."""

from itertools import permutations

from hypergroupoids.groupoids import (
    discrete_groupoid,
    disjoint_union_groupoids,
    from_group_table,
    indiscrete_groupoid,
    nerve,
    product_groupoids,
)
from hypergroupoids.ssets import constant_simplicial_set, coskeleton


def cyclic_group(n):
    return from_group_table(range(n), lambda a, b: (a + b) % n)


def symmetric_group_3():
    elements = list(permutations(range(3)))
    return from_group_table(elements, lambda p, q: tuple(p[q[i]] for i in range(3)))


def groupoid_corpus():
    """(name, groupoid, has_nonidentity_arrow) triples; at least ten."""
    z2, z3, s3 = cyclic_group(2), cyclic_group(3), symmetric_group_3()
    entries = [
        ("Z/2", z2, True),
        ("Z/3", z3, True),
        ("S3", s3, True),
        ("discrete-1", discrete_groupoid("a"), False),
        ("discrete-2", discrete_groupoid("ab"), False),
        ("discrete-3", discrete_groupoid("abc"), False),
        ("discrete-4", discrete_groupoid("abcd"), False),
        ("indiscrete-2", indiscrete_groupoid("ab"), True),
        ("indiscrete-3", indiscrete_groupoid("abc"), True),
        ("indiscrete-4", indiscrete_groupoid("abcd"), True),
        ("Z/2-x-indiscrete-2", product_groupoids(z2, indiscrete_groupoid("ab")), True),
        ("Z/3-plus-discrete-1", disjoint_union_groupoids(z3, discrete_groupoid("x")), True),
        ("Z/2-plus-Z/2", disjoint_union_groupoids(z2, z2), True),
    ]
    return entries


def nerve_corpus(N=3):
    return [(name, nerve(G, N), nontrivial) for name, G, nontrivial in groupoid_corpus()]


def two_point_coskeleton(N):
    return coskeleton(constant_simplicial_set(("p", "q"), 0), 0, N, validate=False)


def sset_corpus(N=3):
    """Verified and near-miss simplicial sets for oracle sweeps."""
    from hypergroupoids.ssets import boundary, horn, standard_simplex

    objs = [
        ("two-point-coskeleton", two_point_coskeleton(N)),
        ("constant-3", constant_simplicial_set(("a", "b", "c"), N)),
        ("point", standard_simplex(0, N)),
        ("delta-2", standard_simplex(2, N)),
        ("boundary-2", boundary(2, N)),
        ("horn-2-1", horn(2, 1, N)),
    ]
    objs.extend(
        (f"nerve-{name}", X)
        for name, X, _ in nerve_corpus(N)
        if name in ("Z/2", "Z/3", "discrete-2", "indiscrete-2", "Z/2-plus-Z/2")
    )
    return objs


def chain_complex_corpus():
    """Small complexes with ranks <= 4 and torsion <= 6; at least ten."""
    from hypergroupoids.abelian import AbHom, ChainComplex, FGAbelianGroup
    from hypergroupoids.intlinalg import IntMatrix

    Z = FGAbelianGroup(1)
    Z2 = FGAbelianGroup(0, (2,))
    Z4 = FGAbelianGroup(0, (4,))
    Z6 = FGAbelianGroup(0, (6,))
    ZZ = FGAbelianGroup(2)
    mixed = FGAbelianGroup(1, (2,))

    def hom(src, tgt, rows):
        return AbHom(src, tgt, IntMatrix(rows, src.generators))

    cx = [
        ("Z-in-0", ChainComplex([Z], [])),
        ("Z4-in-0", ChainComplex([Z4], [])),
        ("Z-times-2", ChainComplex([Z, Z], [hom(Z, Z, [[2]])])),
        ("Z-zero-map", ChainComplex([Z, Z], [hom(Z, Z, [[0]])])),
        ("Z6-times-3", ChainComplex([Z6, Z6], [hom(Z6, Z6, [[3]])])),
        (
            "Z-two-step",
            ChainComplex([Z, Z, Z], [hom(Z, Z, [[2]]), hom(Z, Z, [[0]])]),
        ),
        (
            "Z2-Z4-Z",
            ChainComplex(
                [Z2, Z4, Z],
                [hom(Z4, Z2, [[1]]), hom(Z, Z4, [[2]])],
            ),
        ),
        (
            "rank-two",
            ChainComplex([ZZ, ZZ], [hom(ZZ, ZZ, [[1, 1], [1, 1]])]),
        ),
        ("mixed-target", ChainComplex([mixed, Z], [hom(Z, mixed, [[0], [1]])])),
        (
            "Z2-Z4-Z2",
            ChainComplex(
                [Z2, Z4, Z2],
                [hom(Z4, Z2, [[1]]), hom(Z2, Z4, [[2]])],
            ),
        ),
        (
            "Z6-chain",
            ChainComplex(
                [Z6, Z6, Z6],
                [hom(Z6, Z6, [[2]]), hom(Z6, Z6, [[3]])],
            ),
        ),
        ("wide", ChainComplex([FGAbelianGroup(2, (3,))], [])),
    ]
    return cx


def simplicial_group_corpus():
    from hypergroupoids.abelian import (
        FGAbelianGroup,
        constant_simplicial_group,
        denormalize,
        em_space,
    )

    out = [
        ("constant-Z2", constant_simplicial_group(FGAbelianGroup(0, (2,)), 3)),
        ("constant-Z", constant_simplicial_group(FGAbelianGroup(1), 3)),
        ("constant-mixed", constant_simplicial_group(FGAbelianGroup(1, (2,)), 3)),
        ("K(Z2,1)", em_space(FGAbelianGroup(0, (2,)), 1, 3)),
        ("K(Z3,2)", em_space(FGAbelianGroup(0, (3,)), 2, 4)),
        ("K(Z,1)", em_space(FGAbelianGroup(1), 1, 3)),
    ]
    for name, C in chain_complex_corpus():
        if C.top <= 2:
            out.append((f"denorm-{name}", denormalize(C, 3)))
    return out
