"""Boundary components, Euler characteristic and Euler genus of bouquets.

The boundary of a bouquet is modelled by two perfect matchings on ``4n``
endpoints.  Occurrence ``i`` owns endpoints ``a_i = 2i`` and ``b_i = 2i + 1``
(first and second in cyclic order).  Vertex line segments join ``b_i`` to
``a_{i+1}``.  The edge line segments of a loop with occurrences ``i, j``
join ``a_i``-``b_j`` and ``b_i``-``a_j`` when the loop is untwisted, and
``a_i``-``a_j``, ``b_i``-``b_j`` when it is twisted.  Boundary components
are the alternating cycles of the two matchings.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .rotation import SignedRotation, partial_petrial


@dataclass(frozen=True)
class EndpointSystem:
    vertex_matching: tuple[int, ...]
    edge_matching: tuple[int, ...]

    @classmethod
    def from_rotation(cls, r: SignedRotation) -> "EndpointSystem":
        word = r.word
        m = len(word)
        vertex = [0] * (2 * m)
        for i in range(m):
            b, a_next = 2 * i + 1, 2 * ((i + 1) % m)
            vertex[b] = a_next
            vertex[a_next] = b
        edge = [0] * (2 * m)
        for i, j in r.positions().values():
            if (word[i] > 0) == (word[j] > 0):
                pairs = ((2 * i, 2 * j + 1), (2 * i + 1, 2 * j))
            else:
                pairs = ((2 * i, 2 * j), (2 * i + 1, 2 * j + 1))
            for x, y in pairs:
                edge[x] = y
                edge[y] = x
        return cls(tuple(vertex), tuple(edge))

    def cycles(self) -> list[list[int]]:
        """Alternating cycles, each listed starting with an edge step."""
        seen = [False] * len(self.edge_matching)
        out = []
        for start in range(len(seen)):
            if seen[start]:
                continue
            cyc = []
            x = start
            while True:
                y = self.edge_matching[x]
                seen[x] = seen[y] = True
                cyc += [x, y]
                x = self.vertex_matching[y]
                if x == start:
                    break
            out.append(cyc)
        return out


@dataclass(frozen=True)
class GenusReport:
    n: int
    f: int
    chi: int
    eps: int


def boundary_count(r: SignedRotation) -> int:
    if r.n == 0:
        return 1
    return len(EndpointSystem.from_rotation(r).cycles())


def euler_characteristic(r: SignedRotation) -> int:
    return 1 - r.n + boundary_count(r)


def euler_genus(r: SignedRotation) -> int:
    # one vertex, one component: eps = 2 - chi
    return 1 + r.n - boundary_count(r)


def genus_report(r: SignedRotation) -> GenusReport:
    f = boundary_count(r)
    return GenusReport(n=r.n, f=f, chi=1 - r.n + f, eps=1 + r.n - f)


def genus_after_petrial(r: SignedRotation, subset: Iterable[int]) -> int:
    return euler_genus(partial_petrial(r, subset))
