#!/usr/bin/env python3
"""Census of cocompact-type levels.

Counts, for every level up to a bound, how often the newform counting
function loses both sqrt(lambda)-scale main terms, split by the reason,
and reports running densities.  The density of perfect squares is
O(1/sqrt(x)), so the "more than one prime in the squarefree part" reason
dominates as the bound grows.
"""

import argparse
from collections import Counter

from newform_weyl.spectral import classify_cocompact


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max", type=int, default=10**5, help="largest level to classify")
    ap.add_argument(
        "--checkpoints", type=int, default=5, help="number of density checkpoints"
    )
    args = ap.parse_args()
    if args.max < 10:
        ap.error("--max must be at least 10")

    reasons: Counter[str] = Counter()
    cocompact = 0
    marks = [args.max * (i + 1) // args.checkpoints for i in range(args.checkpoints)]
    print(f"{'level':>10}  {'cocompact':>10}  {'density':>9}")
    for M in range(1, args.max + 1):
        cls = classify_cocompact(M)
        if cls.verdict:
            cocompact += 1
            reasons[cls.reason] += 1
        if M in marks:
            print(f"{M:>10}  {cocompact:>10}  {cocompact / M:>9.5f}")

    print()
    print("breakdown by reason:")
    for reason, count in reasons.most_common():
        print(f"  {reason:<28} {count:>10}  ({count / args.max:.5f} of all levels)")


if __name__ == "__main__":
    main()
