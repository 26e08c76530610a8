"""Exhaustive and random generation of bouquets."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .interlacement import is_prime
from .rotation import SignedRotation, join, normalize

MAX_CATALOG_N = 6
MAX_SIGNED_CATALOG_N = 5


@dataclass(frozen=True)
class CatalogSpec:
    n: int
    signed: bool = False
    prime_only: bool = False

    def check(self):
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        cap = MAX_SIGNED_CATALOG_N if self.signed else MAX_CATALOG_N
        if self.n > cap:
            kind = "signed" if self.signed else "unsigned"
            raise CatalogCapExceeded(f"{kind} catalogs are capped at n={cap}, got n={self.n}")


class CatalogCapExceeded(ValueError):
    pass


def _arrangements(counts: dict[int, int], length: int) -> Iterator[list[int]]:
    """Distinct orderings of the multiset given by ``counts``, in lexicographic order."""
    out: list[int] = []

    def rec():
        if len(out) == length:
            yield list(out)
            return
        for k in sorted(counts):
            if counts[k]:
                counts[k] -= 1
                out.append(k)
                yield from rec()
                out.pop()
                counts[k] += 1

    yield from rec()


def enumerate_bouquets(spec: CatalogSpec) -> Iterator[SignedRotation]:
    """One rotation per normalization class of words on labels ``1..n``.

    A normalized word starts with ``+1`` and carries a positive first
    occurrence for every loop, so only those candidates are generated; a
    candidate is emitted when it is its own normal form.
    """
    spec.check()
    n = spec.n
    if n == 0:
        if not spec.prime_only:
            yield SignedRotation(())
        return
    counts = {k: 2 for k in range(1, n + 1)}
    counts[1] = 1
    sign_patterns = list(product((1, -1), repeat=n)) if spec.signed else [(1,) * n]
    for rest in _arrangements(counts, 2 * n - 1):
        base = [1] + rest
        second = {}
        seen = set()
        for i, k in enumerate(base):
            if k in seen:
                second[k] = i
            seen.add(k)
        prime = None
        for signs in sign_patterns:
            word = list(base)
            for k, sgn in zip(range(1, n + 1), signs):
                if sgn < 0:
                    word[second[k]] = -k
            r = SignedRotation(tuple(word))
            if normalize(r) != r:
                continue
            if spec.prime_only:
                if prime is None:
                    prime = is_prime(r)
                if not prime:
                    break
            yield r


def random_rotation(n: int, rng: random.Random, signed: bool = True) -> SignedRotation:
    """Shuffle the multiset ``{1,1,...,n,n}`` and draw fair occurrence signs, then normalize."""
    word = [k for k in range(1, n + 1) for _ in range(2)]
    rng.shuffle(word)
    if signed:
        word = [x if rng.random() < 0.5 else -x for x in word]
    return normalize(SignedRotation(tuple(word)))


def random_trivial_bouquet(n: int, rng: random.Random) -> tuple[SignedRotation, int]:
    """Join ``n`` random loops ``[1,1]`` / ``[1,-1]`` in random nesting; return (bouquet, #orientable).

    Each new loop is either joined on or wrapped around a prefix that
    contains both ends of every loop in it, so no two loops interlace.
    """
    r = SignedRotation(())
    m = 0
    for _ in range(n):
        orientable = rng.random() < 0.5
        m += orientable
        loop = SignedRotation((1, 1) if orientable else (1, -1))
        if rng.random() < 0.5 or not r.word:
            r = join(r, loop) if rng.random() < 0.5 else join(loop, r)
        else:
            k = max(r.labels) + 1
            w = r.word
            cut = rng.choice(_closed_prefixes(w))
            r = SignedRotation((k,) + w[:cut] + (loop.word[1] * k,) + w[cut:])
    return r, m


def _closed_prefixes(word) -> list[int]:
    cuts = [0]
    open_labels = set()
    for i, x in enumerate(word):
        open_labels ^= {abs(x)}
        if not open_labels:
            cuts.append(i + 1)
    return cuts
