import pytest

from hypergroupoids.simplex import (
    MonotoneMap,
    codegeneracy,
    coface,
    compose,
    epi_mono_factor,
    identity,
    injections,
    monotone_maps,
    surjections,
)


def eval_composite(f, g, i):
    # pointwise oracle: apply g, then f
    return f.values[g.values[i]]


def test_coface_values():
    assert coface(0, 1).values == (1,)
    assert coface(1, 2).values == (0, 2)
    assert coface(2, 2).values == (0, 1)
    assert coface(0, 3).values == (1, 2, 3)


def test_codegeneracy_values():
    assert codegeneracy(0, 0).values == (0, 0)
    assert codegeneracy(0, 1).values == (0, 0, 1)
    assert codegeneracy(1, 1).values == (0, 1, 1)


def test_index_range_errors():
    with pytest.raises(ValueError):
        coface(3, 2)
    with pytest.raises(ValueError):
        coface(0, 0)
    with pytest.raises(ValueError):
        codegeneracy(2, 1)
    with pytest.raises(ValueError):
        MonotoneMap(1, 1, (1, 0))
    with pytest.raises(ValueError):
        MonotoneMap(1, 1, (0, 2))


def test_compose_unital():
    f = coface(1, 2)
    assert compose(identity(2), f) == f
    assert compose(f, identity(1)) == f


def test_compose_values_against_pointwise_oracle():
    f, g = coface(1, 2), coface(0, 1)
    h = compose(f, g)
    assert h.values == (2,)
    assert h.values == tuple(eval_composite(f, g, i) for i in range(g.domain + 1))

    # collapsing then omitting lands back at the identity on [0]
    f, g = codegeneracy(0, 0), coface(0, 1)
    h = compose(f, g)
    assert h == identity(0)
    assert h.values == tuple(eval_composite(f, g, i) for i in range(g.domain + 1))


def test_compose_mismatch():
    with pytest.raises(ValueError):
        compose(codegeneracy(0, 1), coface(0, 1))


def test_compose_associative_on_composable_triples():
    # exhaustive over small shapes rather than sampling
    for n0 in range(3):
        for n1 in range(3):
            for n2 in range(3):
                for n3 in range(3):
                    for f in monotone_maps(n2, n3):
                        for g in monotone_maps(n1, n2):
                            for h in monotone_maps(n0, n1):
                                assert compose(compose(f, g), h) == compose(f, compose(g, h))


def test_epi_mono_trivial_cases():
    f = coface(1, 3)
    epi, mono = epi_mono_factor(f)
    assert epi == identity(2) and mono == f
    g = codegeneracy(1, 2)
    epi, mono = epi_mono_factor(g)
    assert epi == g and mono == identity(2)


def test_epi_mono_example():
    f = MonotoneMap(2, 2, (0, 0, 2))
    epi, mono = epi_mono_factor(f)
    assert epi.values == (0, 0, 1)
    assert mono.values == (0, 2)
    assert compose(mono, epi) == f


def test_epi_mono_unique_by_exhaustive_search():
    # brute-force oracle: at ordinals <= 4 exactly one epi-mono pair composes to f
    for n in range(4):
        for m in range(4):
            for f in monotone_maps(n, m):
                found = []
                for k in range(min(n, m) + 1):
                    for epi in surjections(n, k):
                        for mono in injections(k, m):
                            if compose(mono, epi) == f:
                                found.append((epi, mono))
                assert len(found) == 1
                assert found[0] == epi_mono_factor(f)


def test_simplicial_identities():
    # cofaces: d_j d_i = d_i d_{j-1} for i < j
    for n in range(1, 6):
        for j in range(n + 2):
            for i in range(j):
                lhs = compose(coface(j, n + 1), coface(i, n))
                rhs = compose(coface(i, n + 1), coface(j - 1, n))
                assert lhs == rhs
    # codegeneracies: s_i s_j = s_j s_{i+1} for i >= j   (maps [n+2] -> [n])
    for n in range(5):
        for j in range(n + 1):
            for i in range(j, n + 1):
                lhs = compose(codegeneracy(i, n), codegeneracy(j, n + 1))
                rhs = compose(codegeneracy(j, n), codegeneracy(i + 1, n + 1))
                assert lhs == rhs
    # mixed identities
    for n in range(1, 6):
        for j in range(n):
            for i in range(n + 1):
                lhs = compose(codegeneracy(j, n - 1), coface(i, n))
                if i < j:
                    assert lhs == compose(coface(i, n - 1), codegeneracy(j - 1, n - 2))
                elif i in (j, j + 1):
                    assert lhs == identity(n - 1)
                else:
                    assert lhs == compose(coface(i - 1, n - 1), codegeneracy(j, n - 2))


def test_enumeration_counts():
    # monotone maps [n] -> [m] are (n+1)-multisets from m+1 symbols
    from math import comb

    for n in range(4):
        for m in range(4):
            assert len(list(monotone_maps(n, m))) == comb(n + m + 1, n + 1)
            assert len(list(surjections(m + n, m))) > 0
    assert len(list(surjections(3, 1))) == 3
    assert len(list(injections(1, 3))) == 6
