"""Search prime bouquets for two-term polynomials and group hits by intersection graph.

Usage:
    python scripts/explore_binomial.py [--max-n 5]

Prints one line per isomorphism class of intersection graph that produced a
binomial, flagging classes that are not paths.
"""

import argparse
import time
from collections import defaultdict

from bouquet_petrial.interlacement import canonical_graph, interlacement_graph
from bouquet_petrial.verify import explore_binomial


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=5)
    args = ap.parse_args()

    t0 = time.perf_counter()
    hits = explore_binomial(args.max_n)
    classes = defaultdict(list)
    for h in hits:
        classes[canonical_graph(interlacement_graph(h.rotation))].append(h)

    print(f"{len(hits)} binomial bouquets, {len(classes)} graph classes, {time.perf_counter() - t0:.1f}s")
    for key, group in sorted(classes.items()):
        h = group[0]
        tag = "path" if h.is_path else "NOT A PATH"
        print(f"n={h.rotation.n}  {key.hex():>10}  {len(group):5d} realizations  {h.polynomial}  [{tag}]")
    odd = [k for k, g in classes.items() if not g[0].is_path]
    print(f"non-path classes: {len(odd)}")


if __name__ == "__main__":
    main()
