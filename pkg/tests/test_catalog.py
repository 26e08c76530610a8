import random
from itertools import permutations, product

import pytest

from bouquet_petrial.catalog import (
    CatalogCapExceeded,
    CatalogSpec,
    enumerate_bouquets,
    random_rotation,
    random_trivial_bouquet,
)
from bouquet_petrial.interlacement import interlacement_graph, is_prime
from bouquet_petrial.rotation import SignedRotation, normalize


def brute_force_classes(n, signed):
    """All words on 1..n (all occurrence signs) reduced by normalize()."""
    letters = [k for k in range(1, n + 1) for _ in range(2)]
    classes = set()
    for word in set(permutations(letters)):
        for signs in product((1, -1), repeat=2 * n) if signed else [(1,) * (2 * n)]:
            classes.add(normalize(SignedRotation(tuple(x * s for x, s in zip(word, signs)))))
    return classes


@pytest.mark.parametrize("n, signed", [(1, False), (1, True), (2, False), (2, True), (3, False), (3, True)])
def test_catalog_matches_brute_force(n, signed):
    got = list(enumerate_bouquets(CatalogSpec(n, signed=signed)))
    assert len(got) == len(set(got))
    assert set(got) == brute_force_classes(n, signed)


def test_catalog_examples():
    assert [r.word for r in enumerate_bouquets(CatalogSpec(1, signed=True))] == [(1, 1), (1, -1)]
    assert [r.word for r in enumerate_bouquets(CatalogSpec(2))] == [(1, 1, 2, 2), (1, 2, 1, 2)]
    # frozen regression constants (brute-force checked above for n <= 3)
    assert sum(1 for _ in enumerate_bouquets(CatalogSpec(3))) == 16
    assert sum(1 for _ in enumerate_bouquets(CatalogSpec(4))) == 318
    assert sum(1 for _ in enumerate_bouquets(CatalogSpec(4, signed=True))) == 5088


def test_prime_filter():
    all_ = list(enumerate_bouquets(CatalogSpec(4, signed=True)))
    prime = list(enumerate_bouquets(CatalogSpec(4, signed=True, prime_only=True)))
    assert prime == [r for r in all_ if is_prime(r)]


def test_caps():
    with pytest.raises(CatalogCapExceeded):
        list(enumerate_bouquets(CatalogSpec(7)))
    with pytest.raises(CatalogCapExceeded):
        list(enumerate_bouquets(CatalogSpec(6, signed=True)))


def test_random_rotation_reproducible():
    a = [random_rotation(6, random.Random(3)) for _ in range(2)]
    assert a[0] == a[1] and a[0] == normalize(a[0])


def test_random_trivial_bouquet():
    rng = random.Random(1)
    for _ in range(50):
        r, m = random_trivial_bouquet(rng.randint(0, 8), rng)
        assert not interlacement_graph(r).edges
        assert 0 <= m <= r.n
