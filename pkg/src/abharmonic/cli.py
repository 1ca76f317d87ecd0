"""Command-line front end.

Subcommands:

    solve      boundary file -> CSV of u on a polar grid (x, y, re, im)
    expand     boundary file -> JSON of series coefficients
    bounds     JSON report of every bound constant at (alpha, beta, p)
    audit      run a named check suite; exit 1 when violations are found
    identities shorthand for `audit --suite identities`

Exit codes: 0 success / audit pass, 1 audit violations, 2 bad arguments,
3 malformed input file.  Output is deterministic for a fixed seed and
configuration up to the `timestamp` field of JSON reports.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from datetime import datetime, timezone

import numpy as np

from . import boundary
from .audit import SUITE_NAMES, run_suite
from .bounds import HolderPair, full_report
from .errors import BoundaryFileError, ConvergenceError, DomainError, ParameterError
from .harmonic import coefficients_from_boundary, poisson_extension
from .kernel import make_params

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_BAD_ARGS = 2
EXIT_BAD_FILE = 3


def _parse_p(text: str) -> float:
    if text.strip().lower() == "inf":
        return math.inf
    try:
        return float(text)
    except ValueError as exc:
        raise ParameterError(f"bad value for --p: {text!r}") from exc


def _parse_grid(text: str):
    try:
        nr, nt = text.lower().split("x")
        nr, nt = int(nr), int(nt)
    except ValueError as exc:
        raise ParameterError(f"--grid expects NRxNT, got {text!r}") from exc
    if nr < 1 or nt < 1:
        raise ParameterError("--grid dimensions must be positive")
    return nr, nt


def _round17(obj):
    """Normalize floats to 17 significant digits throughout a document."""
    if isinstance(obj, float):
        return float(f"{obj:.17g}")
    if isinstance(obj, dict):
        return {k: _round17(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round17(v) for v in obj]
    return obj


def _emit_json(doc: dict, out_path) -> None:
    doc = _round17(doc)
    text = json.dumps(doc, indent=2)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _timestamp() -> str:
    return datetime.now(timezone.utc).isoformat()


def _open_out(path):
    return open(path, "w", newline="", encoding="utf-8") if path else sys.stdout


def cmd_solve(args) -> int:
    params = make_params(args.alpha, args.beta)
    f = boundary.load(args.boundary)
    u = poisson_extension(params, f, args.nodes)
    nr, nt = args.grid
    radii = [(i + 1) / (nr + 1) * args.rmax for i in range(nr)]
    thetas = 2.0 * math.pi * np.arange(nt) / nt
    fh = _open_out(args.out)
    try:
        writer = csv.writer(fh)
        writer.writerow(["x", "y", "re", "im"])
        for r in radii:
            zs = r * np.exp(1j * thetas)
            vals = np.atleast_1d(u(zs))
            for z, v in zip(zs, vals):
                writer.writerow(
                    [f"{z.real:.17g}", f"{z.imag:.17g}", f"{v.real:.17g}", f"{v.imag:.17g}"]
                )
    finally:
        if fh is not sys.stdout:
            fh.close()
    return EXIT_OK


def cmd_expand(args) -> int:
    params = make_params(args.alpha, args.beta)
    f = boundary.load(args.boundary)
    coeffs = coefficients_from_boundary(params, f)
    doc = {
        "alpha": params.alpha,
        "beta": params.beta,
        "coefficients": {str(k): [v.real, v.imag] for k, v in sorted(coeffs.to_dict().items())},
        "timestamp": _timestamp(),
    }
    _emit_json(doc, args.out)
    return EXIT_OK


def cmd_bounds(args) -> int:
    params = make_params(args.alpha, args.beta)
    hp = HolderPair.from_p(args.p)
    report = full_report(params, hp, nodes=args.nodes)
    doc = {
        "alpha": params.alpha,
        "beta": params.beta,
        "p": "inf" if math.isinf(hp.p) else hp.p,
        "report": report.to_dict(),
        "timestamp": _timestamp(),
    }
    _emit_json(doc, args.out)
    return EXIT_OK


def cmd_audit(args, suite=None) -> int:
    params = make_params(args.alpha, args.beta)
    hp = HolderPair.from_p(args.p)
    suite = suite or args.suite
    results = run_suite(suite, params, hp, seed=args.seed, nodes=args.nodes)
    violations = sum(r.cases_violated for r in results)
    doc = {
        "suite": suite,
        "alpha": params.alpha,
        "beta": params.beta,
        "p": "inf" if math.isinf(hp.p) else hp.p,
        "seed": args.seed,
        "violations": violations,
        "results": [r.to_dict() for r in results],
        "timestamp": _timestamp(),
    }
    _emit_json(doc, args.out)
    csv_path = getattr(args, "csv", None)
    if csv_path:
        from .audit import details_csv_rows, merge_results

        merged = merge_results(suite, results)
        with open(csv_path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            for row in details_csv_rows(merged):
                writer.writerow(row)
    return EXIT_OK if violations == 0 else EXIT_VIOLATIONS


def _add_common(sub):
    sub.add_argument("--alpha", type=float, default=0.0, help="first weight")
    sub.add_argument("--beta", type=float, default=0.0, help="second weight")
    sub.add_argument("--p", type=_parse_p, default=2.0, help="boundary exponent, number or 'inf'")
    sub.add_argument("--nodes", type=int, default=4096, help="circle quadrature nodes")
    sub.add_argument("--seed", type=int, default=987001, help="seed for randomized checks")
    sub.add_argument("--out", default=None, help="output path (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abharmonic",
        description="Weighted-kernel harmonic extensions on the unit disk: "
        "solve, expand, evaluate bound constants, and audit inequalities.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    s = subs.add_parser("solve", help="evaluate the extension on a polar grid")
    _add_common(s)
    s.add_argument("boundary", help="boundary-data JSON document")
    s.add_argument("--grid", type=_parse_grid, default=(16, 64), help="NRxNT polar grid")
    s.add_argument("--rmax", type=float, default=0.95, help="outermost grid radius")
    s.set_defaults(handler=cmd_solve)

    s = subs.add_parser("expand", help="boundary data to series coefficients")
    _add_common(s)
    s.add_argument("boundary", help="boundary-data JSON document")
    s.set_defaults(handler=cmd_expand)

    s = subs.add_parser("bounds", help="report all bound constants")
    _add_common(s)
    s.set_defaults(handler=cmd_bounds)

    s = subs.add_parser("audit", help="run a named check suite")
    _add_common(s)
    s.add_argument("--suite", choices=SUITE_NAMES, default="all")
    s.add_argument("--csv", default=None, help="also write per-case margins as CSV")
    s.set_defaults(handler=cmd_audit)

    s = subs.add_parser("identities", help="run the identity checks")
    _add_common(s)
    s.set_defaults(handler=lambda args: cmd_audit(args, suite="identities"))
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_BAD_ARGS if exc.code not in (0,) else EXIT_OK
    try:
        return args.handler(args)
    except BoundaryFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_FILE
    except (ParameterError, DomainError, ConvergenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_ARGS
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_FILE


if __name__ == "__main__":
    sys.exit(main())
