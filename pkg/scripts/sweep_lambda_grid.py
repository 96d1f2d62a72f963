#!/usr/bin/env python3
"""Sweep the sharp Markov constant over a degree range and the default
lambda grid, writing one CSV per run.

Example:
    python3 scripts/sweep_lambda_grid.py --n-max 60 --out sweep.csv
"""

import argparse
import sys

from markov_gegenbauer.checks import DEFAULT_LAMBDA_GRID
from markov_gegenbauer.cli import main as cli_main


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-min", type=int, default=1)
    ap.add_argument("--n-max", type=int, default=40)
    ap.add_argument("--out", default=None, help="CSV path (default: stdout)")
    ap.add_argument("--parallel", action="store_true")
    args = ap.parse_args()

    argv = ["sweep", "--n-min", str(args.n_min), "--n-max", str(args.n_max)]
    for lv in DEFAULT_LAMBDA_GRID:
        argv += ["--lambda", repr(lv)]
    if args.out:
        argv += ["--out", args.out]
    if args.parallel:
        argv.append("--parallel")
    return cli_main(argv)


if __name__ == "__main__":
    sys.exit(main())
