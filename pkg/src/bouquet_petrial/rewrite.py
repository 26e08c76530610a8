"""Boundary-preserving rewrites of signed rotations.

All patterns are matched on the cyclic word.  A :class:`Site` fixes where the
pattern starts and how long its middle string ``Q`` is; whatever lies outside
the pattern is the untouched prefix ``P``.

=========  =====================  =====================
op         pattern                result
=========  =====================  =====================
``op1``    ``a Q b a``            ``a b Q a``
``op1inv`` ``a b Q a``            ``a Q b a``
``op2``    ``(-a) Q b a``         ``(-b) (-a) Q a``
``op3``    ``a b a b``            (deleted)
``op4``    ``(-a) a``             (deleted)
=========  =====================  =====================

Length-preserving rewrites are written back in place, so positions outside
the pattern keep their indices.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .boundary import boundary_count
from .interlacement import interlacement_graph, is_path
from .rotation import SignedRotation, double_flip

OPS = ("op1", "op1inv", "op2", "op3", "op4")


class RewriteError(ValueError):
    """The word does not match the requested pattern at the given site."""


@dataclass(frozen=True)
class Site:
    op: str
    start: int
    qlen: int = 0

    def roles(self) -> list[str]:
        q = ["Q"] * self.qlen
        return {
            "op1": ["a", *q, "b", "a"],
            "op1inv": ["a", "b", *q, "a"],
            "op2": ["-a", *q, "b", "a"],
            "op3": ["a", "b", "a", "b"],
            "op4": ["-a", "a"],
        }[self.op]

    def positions(self, length: int) -> list[int]:
        return [(self.start + k) % length for k in range(len(self.roles()))]

    def describe(self, length: int) -> str:
        parts: dict[str, list[int]] = {}
        for role, p in zip(self.roles(), self.positions(length)):
            parts.setdefault(role, []).append(p)
        return " ".join(f"{role}@{','.join(map(str, ps))}" for role, ps in parts.items())


@dataclass(frozen=True)
class RewriteStep:
    op: str
    site: Site | None
    before: SignedRotation
    after: SignedRotation
    note: str = ""

    def preserves_boundary(self) -> bool:
        return boundary_count(self.before) == boundary_count(self.after)


class TerminalForm(enum.Enum):
    ISOLATED_VERTEX = "isolated-vertex"
    ONE_ORIENTABLE_LOOP = "one-orientable-loop"


def _segment(word: tuple[int, ...], site: Site) -> tuple[list[int], list[int]]:
    length = len(word)
    if site.op not in OPS:
        raise RewriteError(f"unknown operation {site.op!r}")
    size = len(site.roles())
    if length == 0 or size > length or site.qlen < 0:
        raise RewriteError(f"{site.op} pattern does not fit in a word of length {length}")
    pos = site.positions(length)
    return pos, [word[p] for p in pos]


def _matches(site: Site, seg: list[int]) -> bool:
    op = site.op
    if op in ("op1", "op1inv"):
        return seg[0] == seg[-1]
    if op == "op2":
        return seg[0] == -seg[-1]
    if op == "op3":
        return seg[0] == seg[2] and seg[1] == seg[3] and abs(seg[0]) != abs(seg[1])
    return seg[0] == -seg[1]


def rewrite_word(word: tuple[int, ...], site: Site) -> tuple[int, ...]:
    """Apply ``site`` to a raw occurrence string (no double-occurrence check)."""
    pos, seg = _segment(word, site)
    if not _matches(site, seg):
        raise RewriteError(f"{site.op} does not match at {site.describe(len(word))}: {seg}")
    if site.op in ("op3", "op4"):
        drop = set(pos)
        return tuple(x for i, x in enumerate(word) if i not in drop)
    q = site.qlen
    if site.op == "op1":
        a, mid, b = seg[0], seg[1:1 + q], seg[1 + q]
        new = [a, b, *mid, a]
    elif site.op == "op1inv":
        a, b, mid = seg[0], seg[1], seg[2:2 + q]
        new = [a, *mid, b, a]
    else:
        neg_a, mid, b, a = seg[0], seg[1:1 + q], seg[1 + q], seg[-1]
        new = [-b, neg_a, *mid, a]
    out = list(word)
    for p, x in zip(pos, new):
        out[p] = x
    return tuple(out)


def _rewrite(r: SignedRotation, site: Site, op: str) -> RewriteStep:
    if site.op != op:
        raise RewriteError(f"site is for {site.op}, not {op}")
    return RewriteStep(op, site, r, SignedRotation(rewrite_word(r.word, site)))


def apply_op1(r: SignedRotation, site: Site) -> RewriteStep:
    return _rewrite(r, site, "op1")


def apply_op1_inverse(r: SignedRotation, site: Site) -> RewriteStep:
    return _rewrite(r, site, "op1inv")


def apply_op2(r: SignedRotation, site: Site) -> RewriteStep:
    return _rewrite(r, site, "op2")


def apply_op3(r: SignedRotation, site: Site) -> RewriteStep:
    return _rewrite(r, site, "op3")


def apply_op4(r: SignedRotation, site: Site) -> RewriteStep:
    return _rewrite(r, site, "op4")


def apply(r: SignedRotation, site: Site) -> RewriteStep:
    return _rewrite(r, site, site.op)


def _op2_string_sites(word: tuple[int, ...], start: int, slen: int) -> list[Site]:
    length = len(word)
    if length == 0 or slen < 0 or slen + 2 > length:
        raise RewriteError("string Operation 2 does not fit")
    first, last = word[start % length], word[(start + slen + 1) % length]
    if first != -last:
        raise RewriteError(f"string Operation 2 needs (-a) ... a, found {first} ... {last}")
    return [Site("op2", (start + i) % length, slen - 1 - i) for i in range(slen)]


def op2_string_word(word: tuple[int, ...], start: int, slen: int) -> tuple[int, ...]:
    """String Operation 2 on a raw occurrence string; see :func:`apply_op2_string`."""
    word = tuple(word)
    for site in _op2_string_sites(word, start, slen):
        word = rewrite_word(word, site)
    return word


def apply_op2_string(r: SignedRotation, start: int, slen: int) -> list[RewriteStep]:
    """Operation 2 with a whole string ``S`` in the role of ``b``.

    Rewrites ``X (-a) S a Y`` into ``X S^{-1} (-a) a Y`` by peeling the last
    letter of ``S`` off with a single-letter Operation 2, ``len(S)`` times.
    ``start`` indexes ``-a``.
    """
    sites = _op2_string_sites(r.word, start, slen)
    if not sites:
        site = Site("op2", start % len(r.word), 0)
        return [RewriteStep("op2", site, r, r, note="empty string: identity")]
    steps = []
    for site in sites:
        steps.append(apply_op2(r, site))
        r = steps[-1].after
    return steps


def find_matches(r: SignedRotation, op: str) -> list[Site]:
    """Every cyclic match site of ``op``, deduplicated, ordered by start then length."""
    if op not in OPS:
        raise RewriteError(f"unknown operation {op!r}")
    length = len(r.word)
    if op in ("op3", "op4"):
        qlens = [0]
    else:
        qlens = list(range(0, length - 2))
    found = []
    seen = set()
    for start in range(length):
        for q in qlens:
            site = Site(op, start, q)
            try:
                pos, seg = _segment(r.word, site)
            except RewriteError:
                continue
            if not _matches(site, seg):
                continue
            key = frozenset(zip(pos, site.roles()))
            if key in seen:
                continue
            seen.add(key)
            found.append(site)
    return found


# ---------------------------------------------------------------------------
# reduction of partial Petrials of the path bouquet


@dataclass
class _Reducer:
    word: SignedRotation
    steps: list[RewriteStep] = field(default_factory=list)

    def do(self, site: Site, note: str = ""):
        step = apply(self.word, site)
        if note:
            step = RewriteStep(step.op, step.site, step.before, step.after, note)
        self.steps.append(step)
        self.word = step.after

    def flip(self, label: int, note: str):
        after = double_flip(self.word, [label])
        self.steps.append(RewriteStep("flip", None, self.word, after, note))
        self.word = after

    def at(self, i: int) -> int:
        w = self.word.word
        return w[i % len(w)]

    def adjacent_start(self, label: int) -> int:
        i, j = self.word.positions()[label]
        length = len(self.word.word)
        if (i + 1) % length == j:
            return i
        if (j + 1) % length == i:
            return j
        raise RewriteError(f"occurrences of {label} are not adjacent")

    def make_second_positive(self, pos: int, note: str):
        if self.at(pos) < 0:
            self.flip(abs(self.at(pos)), note)


def _find_anchor(r: SignedRotation) -> int | None:
    """Leftmost ``s`` where the word reads ``x y x z y`` (or ``x y x y`` for two loops)."""
    w = r.word
    length = len(w)
    m = r.n
    for s in range(length):
        x, y = abs(w[s]), abs(w[(s + 1) % length])
        if abs(w[(s + 2) % length]) != x or x == y:
            continue
        if m == 2:
            return s
        z, y2 = abs(w[(s + 3) % length]), abs(w[(s + 4) % length])
        if z not in (x, y) and y2 == y:
            return s
    return None


def reduce_path_petrial(r: SignedRotation) -> tuple[TerminalForm, list[RewriteStep]]:
    """Reduce a partial Petrial of the path bouquet to one of two terminal forms.

    Anchored at the leftmost end chord ``x`` (interlaced only with ``y``):

    * ``x`` twisted: Operation 2 then Operation 4 remove ``x``.
    * ``x``, ``y`` untwisted: inverse Operation 1 then Operation 3 remove both.
    * ``x`` untwisted, ``y`` twisted: inverse Operation 1, Operation 2, then
      Operation 4 twice remove both.

    Two loops with ``x`` untwisted are handled directly: Operation 3 when
    ``y`` is untwisted too, otherwise re-anchor on ``y``.
    """
    if r.n and not is_path(interlacement_graph(r)):
        raise RewriteError(f"not a partial Petrial of a path bouquet: {r}")
    red = _Reducer(r)
    while True:
        m = red.word.n
        if m == 0:
            return TerminalForm.ISOLATED_VERTEX, red.steps
        if m == 1:
            if red.at(0) == red.at(1):
                return TerminalForm.ONE_ORIENTABLE_LOOP, red.steps
            red.do(Site("op4", 0))
            continue

        s = _find_anchor(red.word)
        if s is None:
            raise RewriteError(f"no path-bouquet end chord found in {red.word}")
        x_twisted = red.at(s) != red.at(s + 2)
        y_twisted = red.at(s + 1) != red.at(s + 3 if m == 2 else s + 4)

        if m == 2 and not x_twisted:
            if not y_twisted:
                red.do(Site("op3", s), note="two-loop branch")
                continue
            s += 1
            x_twisted = True

        red.make_second_positive(s + 2, "sign of end chord")
        if x_twisted:
            # case 1: [-x, y, x, M] -> [-y, -x, x, M] -> [-y, M]
            red.do(Site("op2", s, 0), note="case 1")
            x = abs(red.at(s + 2))
            red.do(Site("op4", red.adjacent_start(x)), note="case 1")
            continue

        length = len(red.word.word)
        red.make_second_positive(s + 4, "sign of neighbour chord")
        x, y = abs(red.at(s)), abs(red.at(s + 1))
        # [x, y, x, z, y, M] -> [z, x, y, x, y, M]
        red.do(Site("op1inv", (s + 2) % length, length - 4), note="case 2" if not y_twisted else "case 3")
        if not y_twisted:
            red.do(Site("op3", s), note="case 2")
            continue
        # [z, x, -y, x, y, M] -> [z, x, -x, -y, y, M] -> [z, -y, y, M] -> [z, M]
        red.do(Site("op2", (s + 1) % length, 0), note="case 3")
        red.do(Site("op4", red.adjacent_start(x)), note="case 3")
        red.do(Site("op4", red.adjacent_start(y)), note="case 3")
