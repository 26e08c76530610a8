"""Wall-clock time of the Gray-code enumeration on complete bouquets.

Usage:
    python scripts/benchmark_enumeration.py [--min-n 12] [--max-n 22] [--threads 4]
"""

import argparse
import os
import time

from bouquet_petrial.closed_forms import canonical_complete_bouquet, complete_poly
from bouquet_petrial.polynomial import petrial_polynomial


def timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-n", type=int, default=12)
    ap.add_argument("--max-n", type=int, default=22)
    ap.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    args = ap.parse_args()

    petrial_polynomial(canonical_complete_bouquet(2))  # JIT warm-up
    print(f"{'n':>3} {'subsets':>10} {'1 thread':>10} {f'{args.threads} threads':>11}  formula")
    for n in range(args.min_n, args.max_n + 1):
        b = canonical_complete_bouquet(n)
        p1, t1 = timed(lambda: petrial_polynomial(b))
        pk, tk = timed(lambda: petrial_polynomial(b, threads=args.threads))
        ok = p1 == pk == complete_poly(n)
        print(f"{n:3d} {2 ** n:10d} {t1:9.3f}s {tk:10.3f}s  {'ok' if ok else 'MISMATCH'}")


if __name__ == "__main__":
    main()
