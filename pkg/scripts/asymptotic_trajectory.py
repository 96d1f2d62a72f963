#!/usr/bin/env python3
"""Track c_n / n^2 toward its Bessel-zero limit for each lambda on the
default grid and print the remaining gap at the largest degree.

Example:
    python3 scripts/asymptotic_trajectory.py --n-max 150
"""

import argparse
import sys

from markov_gegenbauer.asymptotics import asymptotic_report
from markov_gegenbauer.checks import DEFAULT_LAMBDA_GRID


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=100)
    ap.add_argument("--points", type=int, default=8, help="trajectory samples per lambda")
    args = ap.parse_args()
    if args.n_max < 20 or args.points < 2:
        print("need --n-max >= 20 and --points >= 2", file=sys.stderr)
        return 2

    step = max(1, (args.n_max - 10) // (args.points - 1))
    ns = sorted(set(range(10, args.n_max, step)) | {args.n_max})
    print(f"{'lambda':>8}  {'limit':>12}  {'c/n^2 @ n_max':>14}  {'rel gap':>10}  bracket")
    for lv in DEFAULT_LAMBDA_GRID:
        r = asymptotic_report(lv, ns)
        final = r.trajectory[-1][1]
        gap = final / r.limit_value - 1.0
        bracket = f"[{r.bracket_lower:.4f}, {r.bracket_upper:.4f}]"
        if r.tight_bracket:
            bracket += f"  tight [{r.tight_bracket[0]:.6f}, {r.tight_bracket[1]:.6f}]"
        print(f"{lv:8.2f}  {r.limit_value:12.8f}  {final:14.8f}  {gap:10.2e}  {bracket}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
