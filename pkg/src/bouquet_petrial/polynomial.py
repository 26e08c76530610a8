"""The partial-Petrial polynomial: subsets of loops counted by Euler genus."""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .boundary import euler_genus
from .rotation import SignedRotation, partial_petrial

DEFAULT_CAP = 30


class CapExceeded(ValueError):
    """The requested enumeration is larger than the configured cap."""


@dataclass(frozen=True)
class GenusPolynomial:
    """Exact coefficient map ``degree -> count``; zero coefficients are dropped."""

    coeffs: dict[int, int] = field(default_factory=dict)
    n: int | None = None

    def __post_init__(self):
        clean = {int(d): int(c) for d, c in sorted(self.coeffs.items()) if c}
        object.__setattr__(self, "coeffs", clean)

    def __eq__(self, other):
        if not isinstance(other, GenusPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs.items()))

    def __getitem__(self, degree: int) -> int:
        return self.coeffs.get(degree, 0)

    def __add__(self, other: "GenusPolynomial") -> "GenusPolynomial":
        out = dict(self.coeffs)
        for d, c in other.coeffs.items():
            out[d] = out.get(d, 0) + c
        return GenusPolynomial(out, self.n)

    def degrees(self) -> list[int]:
        return list(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for d, c in self.coeffs.items():
            if d == 0:
                terms.append(str(c))
            else:
                mono = "z" if d == 1 else f"z^{d}"
                terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms)

    def to_dict(self) -> dict:
        return {"edges": self.n, "coeffs": {str(d): c for d, c in self.coeffs.items()}}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> "GenusPolynomial":
        return cls({int(d): int(c) for d, c in data["coeffs"].items()}, data.get("edges"))


def _require_nonzero(p: GenusPolynomial):
    if not p.coeffs:
        raise ValueError("the zero polynomial has no degree")


def min_degree(p: GenusPolynomial) -> int:
    _require_nonzero(p)
    return min(p.coeffs)


def max_degree(p: GenusPolynomial) -> int:
    _require_nonzero(p)
    return max(p.coeffs)


def evaluate_at_one(p: GenusPolynomial) -> int:
    _require_nonzero(p)
    return sum(p.coeffs.values())


def is_interpolating(p: GenusPolynomial) -> bool:
    degs = p.degrees()
    return not degs or degs[-1] - degs[0] + 1 == len(degs)


def is_binomial(p: GenusPolynomial) -> bool:
    return len(p.coeffs) == 2


def _kernel_inputs(r: SignedRotation):
    m = len(r.word)
    signs = np.array([1 if x > 0 else -1 for x in r.word], dtype=np.int8)
    partner = np.zeros(m, dtype=np.int64)
    pos = r.positions()
    toggle = np.zeros(r.n, dtype=np.int64)
    for b, label in enumerate(r.labels):
        i, j = pos[label]
        partner[i], partner[j] = j, i
        toggle[b] = j
    return signs, partner, toggle


def petrial_polynomial(
    r: SignedRotation,
    cap: int = DEFAULT_CAP,
    threads: int = 1,
    split_bits: int | None = None,
) -> GenusPolynomial:
    """Enumerate all ``2**n`` partial Petrials of ``r`` and tally Euler genus.

    With ``threads > 1`` (or an explicit ``split_bits``) the subset space is
    cut into ``2**split_bits`` blocks by fixing the top bits; blocks run on a
    thread pool and their counts are summed.
    """
    from ._kernel import enumerate_block

    n = r.n
    if n > cap:
        raise CapExceeded(f"{n} loops exceeds the enumeration cap of {cap}")
    if n == 0:
        return GenusPolynomial({0: 1}, 0)
    signs, partner, toggle = _kernel_inputs(r)

    if split_bits is None:
        split_bits = 0 if threads <= 1 else min(n, max(1, (threads - 1).bit_length() + 2))
    split_bits = max(0, min(split_bits, n))
    low = n - split_bits
    masks = [hi << low for hi in range(1 << split_bits)]

    def run(mask):
        return enumerate_block(signs, partner, toggle, mask, low)

    if threads > 1 and len(masks) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(run, masks))
    else:
        parts = [run(mask) for mask in masks]
    total = np.sum(parts, axis=0)
    return GenusPolynomial({d: int(c) for d, c in enumerate(total)}, n)


def circle_graph_polynomial(diagram: SignedRotation, **kwargs) -> GenusPolynomial:
    """Polynomial of the circle graph realized by ``diagram``.

    Realization independence is a theorem about bouquets with the same
    interlacement graph; this function simply evaluates one realization.
    """
    return petrial_polynomial(diagram, **kwargs)


def brute_force_polynomial(r: SignedRotation) -> GenusPolynomial:
    """Reference evaluation: twist each subset explicitly and trace it."""
    coeffs: dict[int, int] = {}
    labels = r.labels
    for k in range(len(labels) + 1):
        for subset in combinations(labels, k):
            d = euler_genus(partial_petrial(r, subset))
            coeffs[d] = coeffs.get(d, 0) + 1
    return GenusPolynomial(coeffs, r.n)
