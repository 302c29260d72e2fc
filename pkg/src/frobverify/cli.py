"""Command-line driver: ``frobverify verify|sample|integrate|pvi|parse``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .exact import T_TABLE, W_TABLE, X_TABLE, Z_TABLE, ParseError, UnknownVariableError, parse_poly
from .exact import sparse
from .frobenius import continued_exact_solution, exact_solution, integrate_structural, numeric_metric
from .frobenius.lift import SEED
from .instanton import dataset
from .numeric import PathSpec, t_of_w
from .painleve import CandidateFormatError, CandidateSolution, pvi_coefficients, pvi_residual
from .report import FAIL, ERROR, build_report, validate_report, worst
from .suites import Tolerances, run

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
TABLES = {"z": Z_TABLE, "x": X_TABLE, "w": W_TABLE, "t": T_TABLE}
T_POLES = (1.0, -3.0)


class CliError(Exception):
    """Reported on stderr with exit status 2."""


def _complex(text: str) -> complex:
    try:
        return complex(text.replace(" ", "").replace("i", "j"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}") from None


def _write(text: str, output: str | None) -> None:
    if output in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        Path(output).write_text(text)
    except OSError as exc:
        raise CliError(f"cannot write {output}: {exc}") from exc


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc


def _warn(message: str) -> None:
    print(f"warning: {message}", file=sys.stderr)


# verify


def cmd_verify(args) -> int:
    ns = (0, 1, 2) if args.n == "all" else (int(args.n),)
    tols = Tolerances(tol=args.tol, warn=args.warn, h=args.h, nested_h=args.nested_h, ode_tol=args.ode_tol)
    cases = run(ns, args.suite, args.seed, tols)
    doc = build_report(cases, args.seed)
    validate_report(doc)
    _write(json.dumps(doc, indent=2) + "\n", args.output)
    status = worst(cases)
    counts = {s: sum(c.status == s for c in cases) for s in ("pass", "warn", "fail", "error")}
    print(
        f"{len(cases)} cases: " + ", ".join(f"{v} {k}" for k, v in counts.items()),
        file=sys.stderr,
    )
    return EXIT_FAIL if status in (FAIL, ERROR) else EXIT_OK


# sample


def _sample_ws(args) -> np.ndarray:
    if args.path:
        return np.asarray(PathSpec.from_json(_read(args.path)).waypoints, dtype=complex)
    lo, hi = args.range
    return np.linspace(lo, hi, args.points).astype(complex)


def cmd_sample(args) -> int:
    g = numeric_metric(args.n)
    poles = list(T_POLES) + [p for gi in g for p, _ in gi.poles]
    head = ["w_re", "w_im", "t_re", "t_im"] + [f"g{i}{i}_{part}" for i in (1, 2, 3) for part in ("re", "im")]
    rows = []
    for w in _sample_ws(args):
        near = [p for p in poles if abs(w - p) < args.pole_radius]
        if near:
            _warn(f"skipping w = {w:.6g}: within {args.pole_radius} of pole {near[0]:.6g}")
            continue
        t = t_of_w(w)
        vals = [w.real, w.imag, t.real, t.imag]
        for gi in g:
            v = gi(w)
            vals += [v.real, v.imag]
        rows.append(",".join(repr(float(v) + 0.0) for v in vals))
    if not rows:
        print("error: no valid samples", file=sys.stderr)
        return EXIT_FAIL
    _write(",".join(head) + "\n" + "\n".join(rows) + "\n", args.output)
    return EXIT_OK


# integrate


def cmd_integrate(args) -> int:
    signs = dataset(args.n).sign_triple
    F0, _ = exact_solution(args.n, args.w0, signs)
    try:
        path = PathSpec.from_json(_read(args.path))
    except (ValueError, KeyError, TypeError) as exc:
        raise CliError(f"invalid path file: {exc}") from exc
    if abs(complex(path.waypoints[0]) - F0.t) > 1e-12:
        # paths are anchored at the base point t(w0)
        path = PathSpec(np.concatenate([[F0.t], np.asarray(path.waypoints, dtype=complex)]))
    result = integrate_structural(F0, path, args.tol)
    _write(result.to_csv(), args.output)
    exact = continued_exact_solution(args.n, path, args.w0, signs)
    summary = {
        "n": args.n,
        "t0": [F0.t.real, F0.t.imag],
        "points": len(result.trajectory),
        "max_trace_drift": float(result.drift.max()),
        "endpoint_vs_exact": float(np.abs(result.final - exact).max()),
    }
    print(json.dumps(summary), file=sys.stderr)
    return EXIT_OK


# pvi


def cmd_pvi(args) -> int:
    try:
        cand = CandidateSolution.load(args.lam)
    except OSError as exc:
        raise CliError(f"cannot read {args.lam}: {exc}") from exc
    except (CandidateFormatError, sparse.SparseFormatError) as exc:
        raise CliError(f"invalid candidate file: {exc}") from exc
    coeffs = pvi_coefficients(args.n, args.sign)
    ev = pvi_residual(cand, coeffs, args.w)
    doc = {
        "n": args.n,
        "sign": args.sign,
        "coefficients": {k: str(getattr(coeffs, k)) for k in ("alpha", "beta", "gamma", "delta")},
        "w": [ev.w.real, ev.w.imag],
        "t": [ev.t.real, ev.t.imag],
        "lambda": [ev.lam.real, ev.lam.imag],
        "residual": [ev.residual.real, ev.residual.imag],
        "abs_residual": abs(ev.residual),
    }
    _write(json.dumps(doc, indent=2) + "\n", args.output)
    return EXIT_OK


# parse


def cmd_parse(args) -> int:
    text = _read(args.file) if args.file else args.expr
    if text is None:
        raise CliError("give an expression or --file")
    try:
        p = parse_poly(text, TABLES[args.vars])
    except (ParseError, UnknownVariableError) as exc:
        raise CliError(f"parse error: {exc}") from exc
    out = sparse.dumps([p]) if args.sparse else p.to_text() + "\n"
    _write(out, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="frobverify", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites and write a JSON report")
    v.add_argument("--n", choices=["0", "1", "2", "all"], default="all")
    v.add_argument("--suite", choices=["exact", "numeric", "all"], default="all")
    v.add_argument("--output", "-o", default="-")
    v.add_argument("--seed", type=lambda s: int(s, 0), default=SEED)
    v.add_argument("--tol", type=float, default=Tolerances.tol)
    v.add_argument("--warn", type=float, default=Tolerances.warn)
    v.add_argument("--h", type=float, default=Tolerances.h)
    v.add_argument("--nested-h", type=float, default=Tolerances.nested_h)
    v.add_argument("--ode-tol", type=float, default=Tolerances.ode_tol)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("sample", help="tabulate t(w) and g_ii(w) as CSV")
    s.add_argument("--n", type=int, choices=[0, 1, 2], required=True)
    src = s.add_mutually_exclusive_group(required=True)
    src.add_argument("--range", type=float, nargs=2, metavar=("W_MIN", "W_MAX"))
    src.add_argument("--path", help="JSON file with waypoints [[re, im], ...]")
    s.add_argument("--points", type=int, default=11)
    s.add_argument("--pole-radius", type=float, default=1e-3)
    s.add_argument("--output", "-o", default="-")
    s.set_defaults(func=cmd_sample)

    i = sub.add_parser("integrate", help="integrate the structural equation along a t-path")
    i.add_argument("--n", type=int, choices=[0, 1, 2], required=True)
    i.add_argument("--path", required=True, help="JSON file with waypoints [[re, im], ...] in the t-plane")
    i.add_argument("--tol", type=float, default=1e-10)
    i.add_argument("--w0", type=_complex, default=2 + 0j, help="branch value of the starting point")
    i.add_argument("--output", "-o", default="-")
    i.set_defaults(func=cmd_integrate)

    p = sub.add_parser("pvi", help="Painleve VI residual of a candidate lambda(w)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--sign", choices=["plus", "minus"], required=True)
    p.add_argument("--lambda", dest="lam", required=True, help="candidate file (lambda-candidate v1)")
    p.add_argument("--w", type=_complex, required=True)
    p.add_argument("--output", "-o", default="-")
    p.set_defaults(func=cmd_pvi)

    q = sub.add_parser("parse", help="parse a polynomial and print it in normal form")
    q.add_argument("expr", nargs="?")
    q.add_argument("--file")
    q.add_argument("--vars", choices=sorted(TABLES), default="z")
    q.add_argument("--sparse", action="store_true", help="print in the sparse file format")
    q.add_argument("--output", "-o", default="-")
    q.set_defaults(func=cmd_parse)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ZeroDivisionError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
