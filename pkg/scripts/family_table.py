"""Side-by-side table of enumerated and closed-form polynomials for K_n and P_n."""

import argparse

from bouquet_petrial.closed_forms import FamilySpec
from bouquet_petrial.polynomial import petrial_polynomial


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=10)
    args = ap.parse_args()
    for family, lo in (("kn", 2), ("pn", 1)):
        print(f"== {family} ==")
        for n in range(lo, args.max_n + 1):
            spec = FamilySpec(family, n)
            got = petrial_polynomial(spec.bouquet())
            mark = "=" if got == spec.polynomial() else "!="
            print(f"{n:3d}  {got}  {mark}  formula")


if __name__ == "__main__":
    main()
