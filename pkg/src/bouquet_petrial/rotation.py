"""Signed rotations of bouquets.

A bouquet with ``n`` loops is stored as a tuple of ``2n`` nonzero integers.
Each integer is one half-edge occurrence around the vertex: its absolute
value is the loop label and its sign is the half-edge sign.  A loop is
orientable exactly when its two occurrences carry the same sign.

The word is read cyclically; the stored order is one linear representative.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence


class RotationError(ValueError):
    """Raised for malformed signed rotations or bad edge subsets."""


class LoopKind(enum.Enum):
    ORIENTABLE = "orientable"
    NON_ORIENTABLE = "non-orientable"


@dataclass(frozen=True)
class SignedRotation:
    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(x) for x in self.word)
        object.__setattr__(self, "word", word)
        if any(x == 0 for x in word):
            raise RotationError("zero is not a valid occurrence")
        counts = Counter(abs(x) for x in word)
        bad = sorted(k for k, c in counts.items() if c != 2)
        if bad:
            k = bad[0]
            raise RotationError(f"label {k} occurs {counts[k]} time(s), expected 2")

    @property
    def n(self) -> int:
        return len(self.word) // 2

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(sorted({abs(x) for x in self.word}))

    def __len__(self):
        return len(self.word)

    def __iter__(self):
        return iter(self.word)

    def __str__(self):
        return render(self)

    def positions(self) -> dict[int, tuple[int, int]]:
        """Map each label to the indices of its two occurrences, in stored order."""
        pos: dict[int, list[int]] = {}
        for i, x in enumerate(self.word):
            pos.setdefault(abs(x), []).append(i)
        return {k: (v[0], v[1]) for k, v in pos.items()}


def rotation(*occurrences: int) -> SignedRotation:
    """Shorthand constructor: ``rotation(1, 2, -1, 2)``."""
    if len(occurrences) == 1 and not isinstance(occurrences[0], int):
        return SignedRotation(tuple(occurrences[0]))
    return SignedRotation(tuple(occurrences))


def parse_rotation(text: str) -> SignedRotation:
    tokens = text.split()
    word = []
    for tok in tokens:
        try:
            x = int(tok)
        except ValueError:
            raise RotationError(f"not an integer token: {tok!r}") from None
        if x == 0:
            raise RotationError("zero is not a valid occurrence")
        word.append(x)
    return SignedRotation(tuple(word))


def render(r: SignedRotation) -> str:
    return " ".join(str(x) for x in r.word)


def loop_kind(r: SignedRotation, label: int) -> LoopKind:
    pos = r.positions()
    if label not in pos:
        raise RotationError(f"label {label} is not a loop of this rotation")
    i, j = pos[label]
    if (r.word[i] > 0) == (r.word[j] > 0):
        return LoopKind.ORIENTABLE
    return LoopKind.NON_ORIENTABLE


def is_orientable_loop(r: SignedRotation, label: int) -> bool:
    return loop_kind(r, label) is LoopKind.ORIENTABLE


def _flip_first_positive(word: Sequence[int]) -> tuple[tuple[int, ...], frozenset[int]]:
    seen = set()
    flipped = set()
    for x in word:
        k = abs(x)
        if k not in seen:
            seen.add(k)
            if x < 0:
                flipped.add(k)
    out = tuple(-x if abs(x) in flipped else x for x in word)
    return out, frozenset(flipped)


def _key(word: Sequence[int]) -> tuple[tuple[int, int], ...]:
    return tuple((abs(x), 1 if x > 0 else -1) for x in word)


def normalize_with_moves(r: SignedRotation) -> tuple[SignedRotation, int, frozenset[int]]:
    """Canonical form together with the moves that produce it.

    Returns ``(canonical, shift, flipped)``: rotate ``r`` left by ``shift``
    and then negate both occurrences of every label in ``flipped``.
    For each cyclic shift the loops are flipped so that their first
    occurrence is positive; the least candidate under (label, sign)
    comparison wins.
    """
    word = r.word
    if not word:
        return r, 0, frozenset()
    best = None
    for s in range(len(word)):
        rotated = word[s:] + word[:s]
        cand, flipped = _flip_first_positive(rotated)
        k = _key(cand)
        if best is None or k < best[0]:
            best = (k, cand, s, flipped)
    _, cand, s, flipped = best
    return SignedRotation(cand), s, flipped


def normalize(r: SignedRotation) -> SignedRotation:
    return normalize_with_moves(r)[0]


def equivalent(r1: SignedRotation, r2: SignedRotation) -> bool:
    return normalize(r1) == normalize(r2)


def cyclic_shift(r: SignedRotation, shift: int) -> SignedRotation:
    if not r.word:
        return r
    s = shift % len(r.word)
    return SignedRotation(r.word[s:] + r.word[:s])


def double_flip(r: SignedRotation, labels: Iterable[int]) -> SignedRotation:
    """Negate both occurrences of each given loop (an equivalent rotation)."""
    labels = set(labels)
    missing = labels - set(r.labels)
    if missing:
        raise RotationError(f"labels {sorted(missing)} are not loops of this rotation")
    return SignedRotation(tuple(-x if abs(x) in labels else x for x in r.word))


def partial_petrial(r: SignedRotation, subset: Iterable[int]) -> SignedRotation:
    """Half-twist every loop in ``subset`` by negating its second stored occurrence."""
    subset = set(subset)
    pos = r.positions()
    missing = subset - pos.keys()
    if missing:
        raise RotationError(f"labels {sorted(missing)} are not loops of this rotation")
    word = list(r.word)
    for k in subset:
        j = pos[k][1]
        word[j] = -word[j]
    return SignedRotation(tuple(word))


def inverse_string(occurrences: Sequence[int]) -> tuple[int, ...]:
    """Reverse a string of occurrences and negate every sign."""
    return tuple(-x for x in reversed(occurrences))


def reverse(r: SignedRotation) -> SignedRotation:
    """Mirror image: the same occurrences read in the opposite direction."""
    return SignedRotation(tuple(reversed(r.word)))


def relabel(r: SignedRotation, mapping: dict[int, int]) -> SignedRotation:
    return SignedRotation(tuple(mapping[abs(x)] * (1 if x > 0 else -1) for x in r.word))


def join(r1: SignedRotation, r2: SignedRotation) -> SignedRotation:
    """One-vertex join: relabel ``r2`` above ``r1`` and concatenate the words."""
    base = max(r1.labels, default=0)
    mapping = {k: base + i + 1 for i, k in enumerate(r2.labels)}
    return SignedRotation(r1.word + relabel(r2, mapping).word)


def orientable_count(r: SignedRotation) -> int:
    return sum(1 for k in r.labels if is_orientable_loop(r, k))
