"""Executable checks of the face-count, polynomial and rewriting statements.

Every suite returns a :class:`VerificationReport`; a suite passes when its
failure list is empty.  Random suites are reproducible from ``seed``.
"""

from __future__ import annotations

import random
import time
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable

from .boundary import boundary_count
from .catalog import CatalogSpec, enumerate_bouquets, random_rotation, random_trivial_bouquet
from .closed_forms import canonical_complete_bouquet, canonical_path_bouquet, complete_poly, path_poly
from .interlacement import (
    canonical_graph,
    interlacement_graph,
    is_complete,
    is_path,
    is_prime,
)
from .polynomial import (
    evaluate_at_one,
    is_binomial,
    is_interpolating,
    max_degree,
    min_degree,
    petrial_polynomial,
)
from .rewrite import OPS, RewriteError, Site, TerminalForm, apply, find_matches, reduce_path_petrial
from .rotation import (
    SignedRotation,
    is_orientable_loop,
    join,
    partial_petrial,
    reverse,
)

DEFAULT_SEED = 20240607


@dataclass
class VerificationReport:
    suite: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, message: str):
        self.failures.append(message)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.suite}: {self.cases} cases, {len(self.failures)} failures, {self.wall_time:.2f}s"


def is_twisted_complete_form(r: SignedRotation) -> bool:
    """True for ``[e1..en, -e1..-en]`` up to relabelling, cyclic shift and double flips."""
    n = r.n
    if n < 2 or any(is_orientable_loop(r, k) for k in r.labels):
        return False
    w = r.word
    length = len(w)
    return any(
        all(abs(w[(s + k) % length]) == abs(w[(s + n + k) % length]) for k in range(n))
        for s in range(n)
    )


def random_site(op: str, rng: random.Random, max_n: int = 8) -> tuple[SignedRotation, Site]:
    """A random rotation with a uniformly chosen match site for ``op``.

    When a random word has no match, a small witness pattern is joined on
    and the result is cyclically shifted.
    """
    plants = {
        "op1": (1, 2, 1, 2),
        "op1inv": (1, 2, 1, 2),
        "op2": (-1, 2, 1, 2),
        "op3": (1, 2, 1, 2),
        "op4": (-1, 1),
    }
    r = random_rotation(rng.randint(1, max_n), rng)
    sites = find_matches(r, op)
    if not sites:
        plant = SignedRotation(plants[op])
        if rng.random() < 0.5:
            plant = SignedRotation(tuple(-x for x in plant.word))
        r = join(r, plant)
        s = rng.randrange(len(r.word))
        r = SignedRotation(r.word[s:] + r.word[:s])
        sites = find_matches(r, op)
    return r, rng.choice(sites)


def _random_subset(r: SignedRotation, rng: random.Random) -> list[int]:
    return [k for k in r.labels if rng.random() < 0.5]


# -- suites ------------------------------------------------------------------


def suite_kn(report, rng, max_n=12):
    for n in range(2, max_n + 1):
        report.cases += 1
        got = petrial_polynomial(canonical_complete_bouquet(n))
        want = complete_poly(n)
        if got != want:
            report.fail(f"K_{n}: enumerated {got} != formula {want}")


def suite_pn(report, rng, max_n=12):
    for n in range(1, max_n + 1):
        report.cases += 1
        got = petrial_polynomial(canonical_path_bouquet(n))
        want = path_poly(n)
        if got != want:
            report.fail(f"P_{n}: enumerated {got} != formula {want}")


def suite_faces(report, rng, max_n=12):
    for n in range(1, max_n + 1):
        b = canonical_complete_bouquet(n)
        report.cases += 1
        if boundary_count(b) != (1 if n % 2 == 0 else 2):
            report.fail(f"f({b}) = {boundary_count(b)}")
        for k in range(1, n + 1):
            for subset in combinations(b.labels, k):
                report.cases += 1
                t = partial_petrial(b, subset)
                if boundary_count(t) != k:
                    report.fail(f"f({t}) = {boundary_count(t)}, expected {k}")


def suite_prime_bound(report, rng, max_n=4):
    for n in range(2, max_n + 1):
        saw_extremal = False
        for r in enumerate_bouquets(CatalogSpec(n, signed=True, prime_only=True)):
            report.cases += 1
            f = boundary_count(r)
            extremal = is_twisted_complete_form(r)
            saw_extremal |= extremal
            if f > n:
                report.fail(f"prime {r} has f={f} > {n}")
            if (f == n) != extremal:
                report.fail(f"prime {r}: f={f}, twisted-complete form={extremal}")
        if not saw_extremal:
            report.fail(f"n={n}: no rotation of the extremal form was generated")


def suite_trivial_loops(report, rng, samples=500, max_n=10):
    for _ in range(samples):
        report.cases += 1
        r, m = random_trivial_bouquet(rng.randint(0, max_n), rng)
        if interlacement_graph(r).edges:
            report.fail(f"generator produced interlaced loops: {r}")
        elif boundary_count(r) != m + 1:
            report.fail(f"{r}: f={boundary_count(r)}, orientable loops={m}")


def suite_join(report, rng, samples=500, max_n=6):
    for _ in range(samples):
        report.cases += 1
        r1 = random_rotation(rng.randint(0, max_n), rng)
        r2 = random_rotation(rng.randint(0, max_n), rng)
        f = boundary_count(join(r1, r2))
        if f != boundary_count(r1) + boundary_count(r2) - 1:
            report.fail(f"join({r1} | {r2}): f={f}")


def suite_ops(report, rng, samples=1000, ops=("op1", "op2", "op3", "op4", "op1inv")):
    for op in ops:
        for _ in range(samples):
            report.cases += 1
            r, site = random_site(op, rng)
            try:
                step = apply(r, site)
            except RewriteError as exc:
                report.fail(f"{op} on {r} at {site}: {exc}")
                continue
            if not step.preserves_boundary():
                report.fail(
                    f"{op} on {r} at {site}: f {boundary_count(step.before)} -> {boundary_count(step.after)}"
                )


def suite_structure(report, rng, samples=500, max_n=10, catalog_n=4):
    for _ in range(samples):
        report.cases += 1
        r = random_rotation(rng.randint(0, max_n), rng)
        p = petrial_polynomial(r)
        n = r.n
        problems = []
        if not is_interpolating(p):
            problems.append("not interpolating")
        if evaluate_at_one(p) != 2 ** n:
            problems.append(f"sum {evaluate_at_one(p)} != 2^{n}")
        if max_degree(p) != n:
            problems.append(f"max degree {max_degree(p)} != {n}")
        if n >= 2 and is_prime(r) and min_degree(p) < 1:
            problems.append("prime with constant term")
        if problems:
            report.fail(f"{r}: {p}: {', '.join(problems)}")
    for n in range(2, catalog_n + 1):
        for r in enumerate_bouquets(CatalogSpec(n, signed=True, prime_only=True)):
            report.cases += 1
            p = petrial_polynomial(r)
            complete = is_complete(interlacement_graph(r))
            if (min_degree(p) == 1) != complete:
                report.fail(f"{r}: min degree {min_degree(p)}, complete={complete}")


def suite_invariance(report, rng, samples=500, catalog_n=4, max_n=10):
    groups = defaultdict(set)
    for n in range(0, catalog_n + 1):
        for r in enumerate_bouquets(CatalogSpec(n, signed=True)):
            report.cases += 1
            groups[canonical_graph(interlacement_graph(r))].add(petrial_polynomial(r))
    for key, polys in groups.items():
        if len(polys) != 1:
            report.fail(f"graph {key.hex()}: {len(polys)} distinct polynomials {sorted(map(str, polys))}")
    a = petrial_polynomial(SignedRotation((1, 2, 1, 3, 2, 3)))
    b = petrial_polynomial(SignedRotation((2, 1, 2, 3, 1, 3)))
    report.cases += 1
    if a != b:
        report.fail(f"P_3 realizations differ: {a} vs {b}")
    for _ in range(samples):
        report.cases += 1
        r = random_rotation(rng.randint(0, max_n), rng)
        subset = _random_subset(r, rng)
        if petrial_polynomial(r) != petrial_polynomial(partial_petrial(r, subset)):
            report.fail(f"{r} twisted at {subset} changes the polynomial")


def suite_reduction(report, rng, max_n=12):
    isolated = {0: 1}
    for n in range(1, max_n + 1):
        base = canonical_path_bouquet(n)
        tally = {TerminalForm.ISOLATED_VERTEX: 0, TerminalForm.ONE_ORIENTABLE_LOOP: 0}
        for bits in product((False, True), repeat=n):
            report.cases += 1
            r = partial_petrial(base, [k for k, on in zip(base.labels, bits) if on])
            try:
                terminal, steps = reduce_path_petrial(r)
            except RewriteError as exc:
                report.fail(f"{r}: {exc}")
                continue
            tally[terminal] += 1
            if not all(step.preserves_boundary() for step in steps):
                report.fail(f"{r}: a reduction step changed the boundary count")
            expected_f = 1 if terminal is TerminalForm.ISOLATED_VERTEX else 2
            if boundary_count(r) != expected_f:
                report.fail(f"{r}: f={boundary_count(r)} but terminal {terminal.value}")
        isolated[n] = tally[TerminalForm.ISOLATED_VERTEX]
        if tally[TerminalForm.ONE_ORIENTABLE_LOOP] != isolated[n - 1]:
            report.fail(
                f"n={n}: {tally[TerminalForm.ONE_ORIENTABLE_LOOP]} one-loop terminals, "
                f"{isolated[n - 1]} isolated at n-1"
            )
        if isolated[n - 1] + isolated[n] != 2 ** n:
            report.fail(f"n={n}: a_(n-1) + a_n = {isolated[n - 1] + isolated[n]} != 2^{n}")


def suite_perf(report, rng, n=20, limit=60.0, threads=4):
    b = canonical_complete_bouquet(n)
    petrial_polynomial(canonical_complete_bouquet(2))  # compile outside the timer
    start = time.perf_counter()
    p = petrial_polynomial(b)
    elapsed = time.perf_counter() - start
    report.cases += 1
    if elapsed >= limit:
        report.fail(f"n={n} took {elapsed:.1f}s (limit {limit}s)")
    if evaluate_at_one(p) != 2 ** n:
        report.fail(f"n={n}: polynomial sums to {evaluate_at_one(p)}")
    report.cases += 1
    q = petrial_polynomial(b, threads=threads)
    if q != p:
        report.fail(f"parallel mode differs: {q} vs {p}")


def suite_reflection(report, rng, samples=300, max_n=8):
    """Mirror images share a polynomial (checked, not assumed)."""
    for _ in range(samples):
        report.cases += 1
        r = random_rotation(rng.randint(0, max_n), rng)
        if petrial_polynomial(r) != petrial_polynomial(reverse(r)):
            report.fail(f"mirror of {r} has a different polynomial")


SUITES: dict[str, Callable] = {
    "kn": suite_kn,
    "pn": suite_pn,
    "faces": suite_faces,
    "prime-bound": suite_prime_bound,
    "trivial-loops": suite_trivial_loops,
    "join": suite_join,
    "ops": suite_ops,
    "structure": suite_structure,
    "invariance": suite_invariance,
    "reduction": suite_reduction,
    "perf": suite_perf,
    "reflection": suite_reflection,
}


def verify(suite: str, seed: int = DEFAULT_SEED, **kwargs) -> VerificationReport:
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    report = VerificationReport(suite)
    rng = random.Random(f"{seed}:{suite}")
    start = time.perf_counter()
    SUITES[suite](report, rng, **kwargs)
    report.wall_time = time.perf_counter() - start
    return report


@dataclass
class BinomialHit:
    rotation: SignedRotation
    polynomial: object
    is_path: bool


def explore_binomial(max_n: int, cap: int = 6) -> list[BinomialHit]:
    """All prime catalog bouquets up to ``max_n`` loops whose polynomial has two terms.

    Hits whose interlacement graph is not a path are candidates against the
    converse of the path theorem; nothing is concluded here.  Unsigned words
    suffice because twisting loops never changes the polynomial.
    """
    if max_n > cap:
        raise ValueError(f"max_n={max_n} exceeds the exploration cap of {cap}")
    hits = []
    for n in range(1, max_n + 1):
        for r in enumerate_bouquets(CatalogSpec(n, signed=False, prime_only=True)):
            p = petrial_polynomial(r)
            if is_binomial(p):
                hits.append(BinomialHit(r, p, is_path(interlacement_graph(r))))
    return hits
