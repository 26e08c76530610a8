"""Command-line front end.

Exit codes: 0 success, 2 usage or parse error, 3 verification failure,
4 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .boundary import genus_report
from .catalog import CatalogCapExceeded, CatalogSpec, enumerate_bouquets
from .closed_forms import FamilySpec
from .interlacement import canonical_graph, signed_interlacement_graph
from .polynomial import DEFAULT_CAP, CapExceeded, petrial_polynomial
from .rewrite import RewriteError, reduce_path_petrial
from .rotation import RotationError, SignedRotation, parse_rotation, partial_petrial, render
from .verify import DEFAULT_SEED, SUITES, explore_binomial, verify

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_CAP = 0, 2, 3, 4


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def read_rotations(args) -> list[SignedRotation]:
    if args.rotation is not None:
        try:
            return [parse_rotation(args.rotation)]
        except RotationError as exc:
            raise UsageError(f"--rotation: {exc}") from None
    if args.file is not None:
        with open(args.file, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
        source = args.file
    else:
        lines = sys.stdin.read().splitlines()
        source = "<stdin>"
    out = []
    for lineno, line in enumerate(lines, 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            out.append(parse_rotation(stripped))
        except RotationError as exc:
            raise UsageError(f"{source}:{lineno}: {exc}") from None
    return out


def cmd_poly(args) -> int:
    for r in read_rotations(args):
        p = petrial_polynomial(r, cap=args.max_n, threads=args.threads)
        print(p.to_json() if args.format == "json" else str(p))
    return EXIT_OK


def cmd_trace(args) -> int:
    for r in read_rotations(args):
        g = genus_report(r)
        if args.format == "json":
            print(_dump({"edges": g.n, "f": g.f, "chi": g.chi, "eps": g.eps}))
        else:
            print(f"f={g.f} χ={g.chi} ε={g.eps}")
    return EXIT_OK


def cmd_igraph(args) -> int:
    for r in read_rotations(args):
        g = signed_interlacement_graph(r)
        if args.canonical:
            key = canonical_graph(g).hex()
            print(_dump({"canonical": key}) if args.format == "json" else key)
        elif args.format == "json":
            signs = {str(k): "+" if s > 0 else "-" for k, s in g.signs.items()}
            print(_dump({"vertices": list(g.vertices), "edges": g.edge_list(), "signs": signs}))
        else:
            edges = " ".join(f"{u}-{v}" for u, v in g.edge_list())
            signs = " ".join(f"{k}{'+' if s > 0 else '-'}" for k, s in g.signs.items())
            print(f"edges: {edges}\tsigns: {signs}")
    return EXIT_OK


def cmd_petrial(args) -> int:
    try:
        subset = [int(x) for x in args.subset.split()]
    except ValueError:
        raise UsageError(f"--subset must list integer labels, got {args.subset!r}") from None
    for r in read_rotations(args):
        try:
            t = partial_petrial(r, subset)
        except RotationError as exc:
            raise UsageError(str(exc)) from None
        print(_dump({"rotation": render(t)}) if args.format == "json" else render(t))
    return EXIT_OK


def cmd_reduce(args) -> int:
    for r in read_rotations(args):
        try:
            terminal, steps = reduce_path_petrial(r)
        except RewriteError as exc:
            raise UsageError(str(exc)) from None
        if args.format == "json":
            log = [
                {
                    "op": s.op,
                    "site": None if s.site is None else s.site.describe(len(s.before.word)),
                    "before": render(s.before),
                    "after": render(s.after),
                    "f": genus_report(s.after).f,
                    "note": s.note,
                }
                for s in steps
            ]
            print(_dump({"input": render(r), "terminal": terminal.value, "steps": log}))
            continue
        print(f"input\t[{render(r)}]\tf={genus_report(r).f}")
        for k, s in enumerate(steps, 1):
            site = "-" if s.site is None else s.site.describe(len(s.before.word))
            note = f"\t# {s.note}" if s.note else ""
            print(
                f"{k}\t{s.op}\t{site}\t[{render(s.before)}] -> [{render(s.after)}]"
                f"\tf={genus_report(s.after).f}{note}"
            )
        print(f"terminal\t{terminal.value}")
    return EXIT_OK


def cmd_formula(args) -> int:
    try:
        p = FamilySpec(args.family, args.n).polynomial()
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(p.to_json() if args.format == "json" else str(p))
    return EXIT_OK


def cmd_catalog(args) -> int:
    spec = CatalogSpec(args.n, signed=args.signed, prime_only=args.prime_only)
    for r in enumerate_bouquets(spec):
        print(render(r))
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from all, {', '.join(SUITES)}")
    ok = True
    for name in names:
        report = verify(name, seed=args.seed)
        ok &= report.passed
        if args.format == "json":
            print(_dump({
                "suite": report.suite,
                "cases": report.cases,
                "failures": report.failures,
                "wall_time": round(report.wall_time, 3),
            }))
        else:
            print(report.summary())
            for msg in report.failures[:20]:
                print(f"  {msg}")
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_explore(args) -> int:
    try:
        hits = explore_binomial(args.max_n)
    except ValueError as exc:
        raise CapExceeded(str(exc)) from None
    for h in hits:
        if args.format == "json":
            print(_dump({"rotation": render(h.rotation), **h.polynomial.to_dict(), "is_path": h.is_path}))
        else:
            tag = "path" if h.is_path else "NOT-PATH"
            print(f"{render(h.rotation)}\t{h.polynomial}\t{tag}")
    if args.format == "text":
        odd = sum(not h.is_path for h in hits)
        print(f"# {len(hits)} binomial hits, {odd} with a non-path interlacement graph")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    inputs = argparse.ArgumentParser(add_help=False)
    src = inputs.add_mutually_exclusive_group()
    src.add_argument("--rotation", help='signed rotation, e.g. "1 2 -1 2"')
    src.add_argument("--file", help="file with one rotation per line ('#' comments)")

    def fmt(default):
        p = argparse.ArgumentParser(add_help=False)
        p.add_argument("--format", choices=("json", "text"), default=default)
        return p

    parser = argparse.ArgumentParser(prog="bouquet-petrial", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", parents=[inputs, fmt("json")], help="partial-Petrial polynomial")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--max-n", type=int, default=DEFAULT_CAP, help="enumeration cap on loops")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("trace", parents=[inputs, fmt("text")], help="f, chi and eps")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("igraph", parents=[inputs, fmt("text")], help="signed interlacement graph")
    p.add_argument("--canonical", action="store_true", help="print the canonical form in hex")
    p.set_defaults(func=cmd_igraph)

    p = sub.add_parser("petrial", parents=[inputs, fmt("text")], help="partial Petrial of a rotation")
    p.add_argument("--subset", required=True, help='loop labels to twist, e.g. "1 3"')
    p.set_defaults(func=cmd_petrial)

    p = sub.add_parser("reduce", parents=[inputs, fmt("text")], help="reduce a path-bouquet Petrial")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("formula", parents=[fmt("json")], help="closed-form polynomial")
    p.add_argument("--family", choices=("kn", "pn"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("catalog", help="exhaustive list of rotations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--signed", action="store_true")
    p.add_argument("--prime-only", action="store_true")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("verify", parents=[fmt("text")], help="run a verification suite")
    p.add_argument("suite", help=f"one of: all, {', '.join(SUITES)}")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("explore-binomial", parents=[fmt("text")], help="search for binomial polynomials")
    p.add_argument("--max-n", type=int, default=5)
    p.set_defaults(func=cmd_explore)
    return parser


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CapExceeded, CatalogCapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
