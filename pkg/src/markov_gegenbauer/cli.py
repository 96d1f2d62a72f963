"""Command-line surface: constant/bound/sweep/extremal/verify/asymptotics.

All numeric output uses fixed 15-significant-digit scientific notation so
that identical flags produce identical bytes on every platform, and JSON
documents round-trip exactly through parse + re-serialize.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import os
import sys
from dataclasses import dataclass

import numpy as np

from .asymptotics import asymptotic_report
from .basis import Lambda
from .checks import DEFAULT_LAMBDA_GRID, run_all
from .constant import extremal_polynomial, sharp_constant, theorem_bound, trace_bound
from .quadrature import oracle_constant_coefficient, oracle_constant_quadrature

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BAD_ARGS = 2
EXIT_IO = 3

CSV_HEADER = "n,lambda,c,trace_bound,theorem_bound,c_over_n2,branch"


def fmt(x: float) -> str:
    """Fixed 15-significant-digit scientific notation."""
    return f"{float(x):.14e}"


def to_json(obj, indent: int = 0) -> str:
    """Deterministic JSON: floats via fmt(), keys in insertion order."""
    pad = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = ",\n".join(
            f'{pad}  {json.dumps(k)}: {to_json(v, indent + 1)}' for k, v in obj.items()
        )
        return "{\n" + items + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = ",\n".join(f"{pad}  {to_json(v, indent + 1)}" for v in obj)
        return "[\n" + items + "\n" + pad + "]"
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return fmt(float(obj))
    return json.dumps(obj)


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _parse_lambda(value: float) -> float:
    try:
        return Lambda(float(value)).value
    except ValueError:
        raise CliError("lambda must exceed -1/2", EXIT_BAD_ARGS)


def _worker_count() -> int:
    raw = os.environ.get("MARKOV_GEGENBAUER_THREADS", "0")
    try:
        cap = int(raw)
    except ValueError:
        cap = 0
    return cap if cap > 0 else (os.cpu_count() or 1)


def _write_text(path: str | None, text: str, out) -> None:
    if path is None:
        out.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc}", EXIT_IO)


def cmd_constant(args, out) -> int:
    lv = _parse_lambda(args.lam)
    r = sharp_constant(args.n, lv, tol=args.tol)
    doc = {
        "schema_version": 1,
        "n": r.n,
        "lambda": r.lam,
        "sharp_constant": r.sharp_constant,
        "branch": r.branch,
        "nu_even": r.nu_even,
        "nu_odd": r.nu_odd,
        "trace_bound": r.trace_bound,
        "theorem_bound": r.theorem_bound,
        "c_over_n2": r.normalized,
    }
    if args.oracle:
        oc = oracle_constant_coefficient(args.n, lv)
        oq = oracle_constant_quadrature(args.n, lv)
        doc["oracle_coefficient"] = oc
        doc["oracle_quadrature"] = oq
        doc["oracle_coefficient_deviation"] = abs(oc - r.sharp_constant) / r.sharp_constant
        doc["oracle_quadrature_deviation"] = abs(oq - r.sharp_constant) / r.sharp_constant
    if args.format == "json":
        out.write(to_json(doc) + "\n")
    else:
        for k, v in doc.items():
            if k == "schema_version":
                continue
            out.write(f"{k} = {fmt(v) if isinstance(v, float) else v}\n")
    return EXIT_OK


def cmd_bound(args, out) -> int:
    lv = _parse_lambda(args.lam)
    doc = {
        "schema_version": 1,
        "n": args.n,
        "lambda": lv,
        "trace_bound": trace_bound(args.n, lv),
        "theorem_bound": theorem_bound(args.n, lv),
    }
    if args.format == "json":
        out.write(to_json(doc) + "\n")
    else:
        out.write(f"trace_bound = {fmt(doc['trace_bound'])}\n")
        out.write(f"theorem_bound = {fmt(doc['theorem_bound'])}\n")
    return EXIT_OK


@dataclass(frozen=True)
class SweepRow:
    n: int
    lam: float
    sharp_constant: float
    trace_bound: float
    theorem_bound: float
    normalized: float
    branch: str


def _sweep_cell(cell: tuple[int, float]) -> SweepRow:
    n, lv = cell
    r = sharp_constant(n, lv)
    if not r.sharp_constant < r.theorem_bound:
        raise CliError(
            f"internal invariant violated at n={n}, lambda={lv}: c >= theorem bound",
            EXIT_VERIFY_FAILED,
        )
    return SweepRow(n, lv, r.sharp_constant, r.trace_bound, r.theorem_bound, r.normalized, r.branch)


def cmd_sweep(args, out) -> int:
    if args.n_min < 1 or args.n_min > args.n_max:
        raise CliError("need 1 <= n-min <= n-max", EXIT_BAD_ARGS)
    lambdas = [_parse_lambda(v) for v in (args.lam or [0.5])]
    cells = [(n, lv) for lv in lambdas for n in range(args.n_min, args.n_max + 1)]
    if args.parallel:
        with concurrent.futures.ThreadPoolExecutor(max_workers=_worker_count()) as ex:
            rows = list(ex.map(_sweep_cell, cells))
    else:
        rows = [_sweep_cell(c) for c in cells]
    if args.format == "csv":
        lines = [CSV_HEADER]
        for r in rows:
            lines.append(
                f"{r.n},{fmt(r.lam)},{fmt(r.sharp_constant)},{fmt(r.trace_bound)},"
                f"{fmt(r.theorem_bound)},{fmt(r.normalized)},{r.branch}"
            )
        text = "\n".join(lines) + "\n"
    else:
        doc = {
            "schema_version": 1,
            "rows": [
                {
                    "n": r.n,
                    "lambda": r.lam,
                    "c": r.sharp_constant,
                    "trace_bound": r.trace_bound,
                    "theorem_bound": r.theorem_bound,
                    "c_over_n2": r.normalized,
                    "branch": r.branch,
                }
                for r in rows
            ],
        }
        text = to_json(doc) + "\n"
    _write_text(args.out, text, out)
    return EXIT_OK


def cmd_extremal(args, out) -> int:
    lv = _parse_lambda(args.lam)
    if args.samples < 2:
        raise CliError("need at least 2 sample points", EXIT_BAD_ARGS)
    grid = np.linspace(-1.0, 1.0, args.samples)
    p = extremal_polynomial(args.n, lv, grid)
    doc = {
        "schema_version": 1,
        "n": p.n,
        "lambda": p.lam,
        "parity": p.parity,
        "achieved_ratio": p.achieved_ratio,
        "coefficients": {str(d): v for d, v in p.coefficients},
        "samples": [[t, v] for t, v in p.samples],
    }
    _write_text(args.out, to_json(doc) + "\n", out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    grid = [_parse_lambda(v) for v in args.lam] if args.lam else list(DEFAULT_LAMBDA_GRID)
    outcomes = run_all(args.max_m, grid, seed=args.seed)
    name_w = max(len(o.check_name) for o in outcomes)
    par_w = max(len(o.parameters) for o in outcomes)
    for o in outcomes:
        line = f"{o.check_name:<{name_w}}  {o.parameters:<{par_w}}  {o.status:<4}  {fmt(o.worst_relative_error)}"
        if o.detail:
            line += f"  {o.detail}"
        out.write(line + "\n")
    failed = [o for o in outcomes if o.status != "pass"]
    out.write(f"{len(outcomes) - len(failed)}/{len(outcomes)} checks passed\n")
    return EXIT_OK if not failed else EXIT_VERIFY_FAILED


def cmd_asymptotics(args, out) -> int:
    lv = _parse_lambda(args.lam)
    if args.n_max < 10:
        raise CliError("n-max must be at least 10", EXIT_BAD_ARGS)
    ns = sorted(set(list(range(10, args.n_max, max(1, args.n_max // 20))) + [args.n_max]))
    r = asymptotic_report(lv, ns)
    doc = {
        "schema_version": 1,
        "lambda": r.lam,
        "bessel_order": r.bessel_order,
        "bessel_first_zero": r.bessel_first_zero,
        "limit_value": r.limit_value,
        "bracket_lower": r.bracket_lower,
        "bracket_upper": r.bracket_upper,
        "tight_bracket": list(r.tight_bracket) if r.tight_bracket else None,
        "trajectory": [[n, v] for n, v in r.trajectory],
    }
    if args.format == "json":
        out.write(to_json(doc) + "\n")
    else:
        out.write(f"lambda = {fmt(r.lam)}\n")
        out.write(f"bessel_order = {fmt(r.bessel_order)}\n")
        out.write(f"bessel_first_zero = {fmt(r.bessel_first_zero)}\n")
        out.write(f"limit_value = {fmt(r.limit_value)}\n")
        out.write(f"limit_bracket = ({fmt(r.bracket_lower)}, {fmt(r.bracket_upper)})\n")
        if r.tight_bracket:
            out.write(
                f"tight_bracket = ({fmt(r.tight_bracket[0])}, {fmt(r.tight_bracket[1])})\n"
            )
        for n, v in r.trajectory:
            out.write(f"n={n:<6d} c/n^2 = {fmt(v)}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="markov-gegenbauer",
        description="Sharp constant of the L2 Markov inequality with Gegenbauer weight",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("constant", help="sharp constant for one (n, lambda)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-13)
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_constant)

    p = sub.add_parser("bound", help="trace and closed-form upper bounds only")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("sweep", help="table of constants over a (n, lambda) grid")
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=float, action="append")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None)
    p.add_argument("--parallel", action="store_true")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("extremal", help="extremal polynomial as JSON")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--samples", type=int, default=33)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("verify", help="run the full identity/bound check suite")
    p.add_argument("--max-m", type=int, default=20)
    p.add_argument("--lambda", dest="lam", type=float, action="append")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("asymptotics", help="c/n^2 trajectory and limit brackets")
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--n-max", type=int, default=100)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_asymptotics)

    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_BAD_ARGS if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args, out)
    except CliError as exc:
        print(str(exc), file=sys.stderr)
        return exc.code
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_BAD_ARGS


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
