"""Intersection graphs of bouquets, primality, and small-graph canonical forms."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .rotation import SignedRotation, is_orientable_loop

MAX_CANONICAL_VERTICES = 8


@dataclass(frozen=True)
class InterlacementGraph:
    vertices: tuple[int, ...]
    edges: frozenset[tuple[int, int]]
    signs: dict[int, int] | None = None

    def __post_init__(self):
        edges = frozenset((min(u, v), max(u, v)) for u, v in self.edges)
        if any(u == v for u, v in edges):
            raise ValueError("interlacement graphs have no self-loops")
        vs = set(self.vertices)
        if any(u not in vs or v not in vs for u, v in edges):
            raise ValueError("edge endpoint outside the vertex set")
        object.__setattr__(self, "vertices", tuple(sorted(vs)))
        object.__setattr__(self, "edges", edges)

    def __hash__(self):
        signs = None if self.signs is None else tuple(sorted(self.signs.items()))
        return hash((self.vertices, self.edges, signs))

    def neighbors(self, v: int) -> set[int]:
        return {b if a == v else a for a, b in self.edges if v in (a, b)}

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def interlaced(r: SignedRotation, x: int, y: int) -> bool:
    """True when exactly one occurrence of ``y`` lies strictly between those of ``x``."""
    i, j = r.positions()[x]
    between = sum(1 for k in range(i + 1, j) if abs(r.word[k]) == y)
    return between == 1


def interlacement_graph(r: SignedRotation) -> InterlacementGraph:
    # exactly-one-between is invariant under cyclic shifts, so the stored
    # linear representative is as good as any
    pos = r.positions()
    edges = set()
    for x, y in combinations(r.labels, 2):
        i, j = pos[x]
        p, q = pos[y]
        if (i < p < j) != (i < q < j):
            edges.add((x, y))
    return InterlacementGraph(r.labels, frozenset(edges))


def signed_interlacement_graph(r: SignedRotation) -> InterlacementGraph:
    g = interlacement_graph(r)
    signs = {k: (1 if is_orientable_loop(r, k) else -1) for k in r.labels}
    return InterlacementGraph(g.vertices, g.edges, signs)


def is_connected(g: InterlacementGraph) -> bool:
    if not g.vertices:
        return False
    adj = {v: set() for v in g.vertices}
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    seen = {g.vertices[0]}
    stack = [g.vertices[0]]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(g.vertices)


def is_prime(r: SignedRotation) -> bool:
    """A bouquet is prime iff its intersection graph is connected; the empty bouquet is not."""
    return is_connected(interlacement_graph(r))


def is_complete(g: InterlacementGraph) -> bool:
    n = len(g.vertices)
    return len(g.edges) == n * (n - 1) // 2


def is_path(g: InterlacementGraph) -> bool:
    n = len(g.vertices)
    if n == 0 or not is_connected(g):
        return False
    if n == 1:
        return True
    if len(g.edges) != n - 1:
        return False
    degs = sorted(g.degree(v) for v in g.vertices)
    return degs[:2] == [1, 1] and all(d == 2 for d in degs[2:])


def complete_graph(n: int) -> InterlacementGraph:
    vs = tuple(range(1, n + 1))
    return InterlacementGraph(vs, frozenset(combinations(vs, 2)))


def path_graph(n: int) -> InterlacementGraph:
    vs = tuple(range(1, n + 1))
    return InterlacementGraph(vs, frozenset((i, i + 1) for i in range(1, n)))


def canonical_graph(g: InterlacementGraph) -> bytes:
    """Isomorphism-invariant byte string.

    The first byte is the vertex count; the rest packs the lexicographically
    least upper-triangle adjacency bit string over all vertex orderings.
    """
    n = len(g.vertices)
    if n > MAX_CANONICAL_VERTICES:
        raise ValueError(f"canonical form supports at most {MAX_CANONICAL_VERTICES} vertices, got {n}")
    index = {v: i for i, v in enumerate(g.vertices)}
    adj = [[False] * n for _ in range(n)]
    for u, v in g.edges:
        adj[index[u]][index[v]] = adj[index[v]][index[u]] = True
    pairs = list(combinations(range(n), 2))
    best = None
    for perm in permutations(range(n)):
        bits = tuple(adj[perm[i]][perm[j]] for i, j in pairs)
        if best is None or bits < best:
            best = bits
    best = best or ()
    packed = bytearray([n])
    for k in range(0, len(best), 8):
        byte = 0
        for bit in best[k:k + 8]:
            byte = (byte << 1) | int(bit)
        packed.append(byte)
    return bytes(packed)
