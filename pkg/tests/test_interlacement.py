from collections import defaultdict

import pytest
from hypothesis import given
from conftest import rotations, rotations_with_subset

from bouquet_petrial.catalog import CatalogSpec, enumerate_bouquets
from bouquet_petrial.closed_forms import canonical_complete_bouquet, canonical_path_bouquet
from bouquet_petrial.interlacement import (
    InterlacementGraph,
    canonical_graph,
    complete_graph,
    interlaced,
    interlacement_graph,
    is_complete,
    is_path,
    is_prime,
    path_graph,
    signed_interlacement_graph,
)
from bouquet_petrial.polynomial import petrial_polynomial
from bouquet_petrial.rotation import SignedRotation, cyclic_shift, partial_petrial


def R(*xs):
    return SignedRotation(xs)


def G(vs, es):
    return InterlacementGraph(tuple(vs), frozenset(es))


def test_examples():
    assert interlacement_graph(R(1, 2, 1, 2)).edge_list() == [(1, 2)]
    assert interlacement_graph(R(1, 2, 1, 3, 2, 3)).edge_list() == [(1, 2), (2, 3)]
    for n in range(2, 9):
        assert is_complete(interlacement_graph(canonical_complete_bouquet(n)))


def test_signed_examples():
    g = signed_interlacement_graph(R(1, 2, -1, 2))
    assert g.edge_list() == [(1, 2)] and g.signs == {1: -1, 2: 1}
    g = signed_interlacement_graph(R(1, 1))
    assert g.vertices == (1,) and not g.edges and g.signs == {1: 1}


@given(rotations_with_subset())
def test_twisting_flips_exactly_the_subset_signs(case):
    r, subset = case
    before = signed_interlacement_graph(r)
    after = signed_interlacement_graph(partial_petrial(r, subset))
    assert after.edges == before.edges
    assert after.signs == {k: -s if k in subset else s for k, s in before.signs.items()}


def test_primality():
    assert is_prime(R(1, 2, 1, 2))
    assert not is_prime(R(1, 1, 2, 2))
    assert is_prime(R(1, 1))
    assert not is_prime(R())


def test_recognizers():
    assert is_complete(interlacement_graph(R(1, 2, 3, 1, 2, 3)))
    assert is_path(interlacement_graph(canonical_path_bouquet(4)))
    assert not is_path(interlacement_graph(R(1, 1, 2, 2)))
    assert is_path(G([1], [])) and is_path(G([1, 2], [(1, 2)]))
    assert not is_path(complete_graph(3))
    star = G([1, 2, 3, 4], [(1, 2), (1, 3), (1, 4)])
    assert not is_path(star)


@pytest.mark.parametrize("n", range(1, 9))
def test_path_bouquet_is_path(n):
    assert interlacement_graph(canonical_path_bouquet(n)) == path_graph(n)


@given(rotations(min_n=2))
def test_interlacement_symmetric(r):
    for x in r.labels:
        for y in r.labels:
            if x != y:
                assert interlaced(r, x, y) == interlaced(r, y, x)


@given(rotations(min_n=1))
def test_interlacement_rotation_invariant(r):
    g = interlacement_graph(r)
    for s in range(len(r.word)):
        assert interlacement_graph(cyclic_shift(r, s)).edges == g.edges


def test_canonical_graph():
    assert canonical_graph(G([1, 2, 3], [(1, 2), (2, 3)])) == canonical_graph(G([1, 2, 3], [(2, 1), (1, 3)]))
    assert canonical_graph(complete_graph(3)) != canonical_graph(path_graph(3))
    assert canonical_graph(G([7], [])) == bytes([1])
    with pytest.raises(ValueError):
        canonical_graph(complete_graph(9))


def test_groups_by_graph_share_polynomial():
    groups = defaultdict(set)
    for n in range(0, 4):
        for r in enumerate_bouquets(CatalogSpec(n, signed=True)):
            groups[canonical_graph(interlacement_graph(r))].add(petrial_polynomial(r))
    assert all(len(v) == 1 for v in groups.values())
