"""Closed-form polynomials for complete graphs and paths, and their realizing bouquets."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .polynomial import GenusPolynomial
from .rotation import SignedRotation


@dataclass(frozen=True)
class FamilySpec:
    family: str  # "kn" or "pn"
    n: int

    def __post_init__(self):
        if self.family not in ("kn", "pn"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.n < (2 if self.family == "kn" else 1):
            raise ValueError(f"n={self.n} is too small for family {self.family}")

    def polynomial(self) -> GenusPolynomial:
        return complete_poly(self.n) if self.family == "kn" else path_poly(self.n)

    def bouquet(self) -> SignedRotation:
        if self.family == "kn":
            return canonical_complete_bouquet(self.n)
        return canonical_path_bouquet(self.n)


def binomial(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def canonical_complete_bouquet(n: int) -> SignedRotation:
    """``[1, 2, ..., n, 1, 2, ..., n]``; every pair of loops interlaces."""
    if n < 1:
        raise ValueError("the complete bouquet needs n >= 1")
    half = tuple(range(1, n + 1))
    return SignedRotation(half + half)


def canonical_path_bouquet(n: int) -> SignedRotation:
    """``[1, 2, 1, 3, 2, ..., n, n-1, n]``; only consecutive loops interlace."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return SignedRotation(())
    word = [1]
    for k in range(2, n + 1):
        word += [k, k - 1]
    word.append(n)
    return SignedRotation(tuple(word))


def complete_poly(n: int) -> GenusPolynomial:
    if n < 2:
        raise ValueError("the complete-graph formula needs n >= 2")
    coeffs = {i: binomial(n, n + 1 - i) for i in range(1, n + 1)}
    extra = n if n % 2 == 0 else n - 1
    coeffs[extra] += 1
    return GenusPolynomial(coeffs, n)


def path_poly(n: int) -> GenusPolynomial:
    if n < 1:
        raise ValueError("the path formula needs n >= 1")
    sign = 1 if n % 2 == 0 else -1
    low, rem_low = divmod(2 ** n - sign, 3)
    high, rem_high = divmod(2 ** (n + 1) + sign, 3)
    assert rem_low == 0 and rem_high == 0
    return GenusPolynomial({n - 1: low, n: high}, n)
