#!/usr/bin/env python3
"""Exact coefficient table for small levels.

Prints, for each level up to a bound, the exact full-spectrum and
newform main-term coefficients side by side, plus the classification.
Useful for eyeballing how quickly the newform sqrt(lambda) terms die off
compared to the full-spectrum ones.
"""

import argparse

from newform_weyl.spectral import classify_cocompact, full_level_coeffs, newform_coeffs


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max", type=int, default=36, help="largest level to print")
    args = ap.parse_args()
    if not 1 <= args.max <= 10**4:
        ap.error("--max must lie in [1, 10**4]")

    header = (
        f"{'M':>5}  {'c1 full':>9} {'c1 new':>9}  "
        f"{'c2 full':>9} {'c2 new':>9}  {'c3 full':>32} {'c3 new':>32}  flag"
    )
    print(header)
    print("-" * len(header))
    for M in range(1, args.max + 1):
        full = full_level_coeffs(M)
        new = newform_coeffs(M)
        flag = "cocompact" if classify_cocompact(M).verdict else ""
        print(
            f"{M:>5}  {str(full.c1):>9} {str(new.c1):>9}  "
            f"{str(full.c2):>9} {str(new.c2):>9}  "
            f"{str(full.c3):>32} {str(new.c3):>32}  {flag}"
        )


if __name__ == "__main__":
    main()
