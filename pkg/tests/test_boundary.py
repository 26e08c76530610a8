import pytest
from hypothesis import given
from conftest import rotations

from oracles import dart_walk_faces
from bouquet_petrial.boundary import (
    EndpointSystem,
    boundary_count,
    euler_characteristic,
    euler_genus,
    genus_after_petrial,
    genus_report,
)
from bouquet_petrial.catalog import CatalogSpec, enumerate_bouquets
from bouquet_petrial.interlacement import interlacement_graph, is_prime
from bouquet_petrial.rotation import SignedRotation, orientable_count, partial_petrial


def R(*xs):
    return SignedRotation(xs)


@pytest.mark.parametrize(
    "word, f",
    [
        ((1, 1), 2),
        ((1, -1), 1),
        ((1, 2, 1, 2), 1),
        ((1, 2, 3, 1, 2, 3), 2),
        ((-1, 2, 3, 1, 2, 3), 1),
        ((), 1),
    ],
)
def test_boundary_count_examples(word, f):
    assert boundary_count(SignedRotation(word)) == f


def test_genus_examples():
    assert euler_genus(R(1, 1)) == 0
    assert euler_genus(R(1, -1)) == 1
    assert euler_genus(R(1, 2, 1, 2)) == 2
    assert euler_genus(R()) == 0


def test_characteristic_examples():
    # lone vertex: v - e + f = 1 - 0 + 1, matching eps = 2 - chi = 0
    assert euler_characteristic(R()) == 2
    assert euler_characteristic(R(1, 1)) == 2
    assert euler_characteristic(R(1, 2, 1, 2)) == 0


def test_genus_after_petrial_examples():
    assert genus_after_petrial(R(1, 2, 1, 2), []) == 2
    assert genus_after_petrial(R(1, 2, 1, 2), [1, 2]) == 1
    assert genus_after_petrial(R(1, 1), [1]) == 1


@given(rotations(min_n=1))
def test_matchings_are_perfect_involutions(r):
    es = EndpointSystem.from_rotation(r)
    for m in (es.vertex_matching, es.edge_matching):
        assert all(m[m[x]] == x and m[x] != x for x in range(len(m)))


@given(rotations(max_n=9))
def test_trace_agrees_with_dart_walk(r):
    assert boundary_count(r) == dart_walk_faces(r.word)


@given(rotations(max_n=9))
def test_report_identities(r):
    g = genus_report(r)
    assert g.chi == 1 - g.n + g.f
    assert g.eps == 1 + g.n - g.f
    assert 1 <= g.f <= g.n + 1
    assert g.eps >= 0


@given(rotations(max_n=9, signed=False))
def test_orientable_parity(r):
    # all-orientable bouquets have even Euler genus
    assert (r.n + 1 - boundary_count(r)) % 2 == 0


def test_trivial_loop_law_small():
    # joins of [1,1] and [1,-1]: f = #orientable + 1
    r = R(1, 1, 2, -2, 3, 3, 4, 4, 5, -5)
    assert not interlacement_graph(r).edges
    assert boundary_count(r) == orientable_count(r) + 1 == 4


def test_prime_face_bound_exhaustive_n3():
    for r in enumerate_bouquets(CatalogSpec(3, signed=True, prime_only=True)):
        assert is_prime(r)
        assert boundary_count(r) <= 3


@pytest.mark.parametrize("n", range(1, 9))
def test_canonical_complete_subsets(n):
    half = tuple(range(1, n + 1))
    b = SignedRotation(half + half)
    assert boundary_count(b) == (1 if n % 2 == 0 else 2)
    for mask in range(1, 2 ** n):
        subset = [k for k in half if mask >> (k - 1) & 1]
        assert boundary_count(partial_petrial(b, subset)) == len(subset)
