"""Command-line front end: spectra, curves, sweeps, distance studies, checks.

Every subcommand writes CSV (header row, LF endings, 17 significant digits)
or JSON.  Exit codes: 0 success, 1 failed verification, 2 bad arguments,
3 solver did not converge.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import json
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from .asymptotics import curve_samples, lambda_c
from .pencil import PencilSpec, delta_Nc
from .rootfinder import SolverOptions, compute_spectrum
from .verify import SUITES, run_suite, zero_distance_grid, zero_distance_rows

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_NONCONVERGED = 3

SWEEP_C_MAX = 2.05


class UsageError(Exception):
    """Bad flag combination detected after argparse."""


def fmt(x) -> str:
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if x is None:
        return ""
    x = float(x)
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return format(x, ".17g")


@contextlib.contextmanager
def _output(path):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            yield fh


def write_csv(path, header, rows):
    with _output(path) as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([fmt(v) for v in row])


def write_json(path, payload):
    with _output(path) as fh:
        fh.write(json.dumps(payload, indent=2) + "\n")


def _json_number(x):
    x = float(x)
    return x if math.isfinite(x) else repr(x)


def _parse_range(text: str, parts: int, kind=float):
    try:
        vals = [kind(t) for t in text.split(":")]
    except ValueError:
        raise UsageError(f"cannot parse range {text!r}") from None
    if len(vals) != parts:
        raise UsageError(f"range {text!r} needs {parts} colon-separated fields")
    return vals


def c_grid_from(text: str) -> np.ndarray:
    """``start:stop:step`` with both ends included."""
    start, stop, step = _parse_range(text, 3)
    if step <= 0 or stop < start:
        raise UsageError("c-grid needs step > 0 and stop >= start")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return start + step * np.arange(count)


def solver_options(args) -> SolverOptions:
    return SolverOptions(tol=args.tol, max_iter=args.max_iter, precision=args.precision)


# spectrum

SPECTRUM_HEADER = ["re", "im", "multiplicity", "is_real", "residual"]
SCALED_HEADER = ["re", "im", "re_scaled", "im_scaled", "multiplicity", "is_real", "residual"]


def spectrum_rows(sp, scaled: bool):
    N = sp.spec.N
    for e in sp.eigenvalues:
        lam = e.value
        if scaled:
            yield [lam.real, lam.imag, lam.real, N * lam.imag, e.algebraic_multiplicity, e.is_real, e.residual]
        else:
            yield [lam.real, lam.imag, e.algebraic_multiplicity, e.is_real, e.residual]


def cmd_spectrum(args) -> int:
    spec = PencilSpec(args.m, args.n, args.c)
    sp = compute_spectrum(spec, solver_options(args))
    header = SCALED_HEADER if args.scaled else SPECTRUM_HEADER
    rows = list(spectrum_rows(sp, args.scaled))
    if args.format == "json":
        write_json(
            args.out,
            {
                "m": spec.m,
                "n": spec.n,
                "c": spec.c,
                "converged": sp.converged,
                "iterations": sp.iterations,
                "eigenvalues": [
                    {k: (_json_number(v) if isinstance(v, float) else v) for k, v in zip(header, row)} for row in rows
                ],
            },
        )
    else:
        write_csv(args.out, header, rows)
    if not sp.converged:
        print(f"solver did not converge in {sp.iterations} iterations", file=sys.stderr)
        return EXIT_NONCONVERGED
    return EXIT_OK


# curve


def cmd_curve(args) -> int:
    if not 0 <= args.c < 2:
        raise UsageError("curve needs 0 <= c < 2; for c >= 2 the spectrum is real")
    if args.samples < 2:
        raise UsageError("--samples must be >= 2")
    name = "lambda0" if args.c == 0 else "lambda_c"
    rows = [(s.u, s.lambda_value) for s in curve_samples(args.c, args.samples)]
    write_csv(args.out, ["u", name], rows)
    return EXIT_OK


# sweep


def _sweep_frame(task):
    index, m, c, out_dir, opts = task
    sp = compute_spectrum(PencilSpec(m, m, c), opts)
    rows = []
    for row, e in zip(spectrum_rows(sp, scaled=True), sp.eigenvalues):
        u = abs(e.value.real)
        bound = None
        if 0 < c < 2 and 0 < u < 2 - c:
            bound = lambda_c(c, u)
        rows.append(row + [bound])
    name = f"frame_{index:04d}.csv"
    write_csv(os.path.join(out_dir, name), SCALED_HEADER + ["lambda_c"], rows)
    return {"index": index, "c": c, "file": name, "rows": len(rows), "converged": sp.converged}


def cmd_sweep(args) -> int:
    lo, hi = sorted((args.c_from, args.c_to))
    if lo < 0 or hi > SWEEP_C_MAX:
        raise UsageError(f"sweep range must lie in [0, {SWEEP_C_MAX}]")
    if args.steps < 1:
        raise UsageError("--steps must be >= 1")
    if args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    cs = np.linspace(args.c_from, args.c_to, args.steps) if args.steps > 1 else np.array([args.c_from])
    os.makedirs(args.out_dir, exist_ok=True)
    opts = solver_options(args)
    tasks = [(i, args.m, float(c), args.out_dir, opts) for i, c in enumerate(cs)]
    if args.jobs == 1:
        frames = [_sweep_frame(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            frames = list(pool.map(_sweep_frame, tasks))
    manifest = {
        "m": args.m,
        "n": args.m,
        "c_from": args.c_from,
        "c_to": args.c_to,
        "steps": args.steps,
        "columns": SCALED_HEADER + ["lambda_c"],
        "frames": frames,
    }
    write_json(os.path.join(args.out_dir, "manifest.json"), manifest)
    if not all(f["converged"] for f in frames):
        print("solver did not converge for at least one frame", file=sys.stderr)
        return EXIT_NONCONVERGED
    return EXIT_OK


# zero distance


def cmd_zero_distance(args) -> int:
    opts = solver_options(args)
    if args.m_range is not None:
        if args.c is None:
            raise UsageError("--m-range needs --c")
        if args.m is not None or args.c_grid is not None:
            raise UsageError("--m-range cannot be combined with --m or --c-grid")
        first, last = _parse_range(args.m_range, 2, int)
        if first < 1 or last < first:
            raise UsageError("--m-range needs 1 <= first <= last")
        rows = []
        for m in range(first, last + 1):
            (_, d, _), = zero_distance_rows(m, m, [args.c], opts)
            rows.append((m, d, delta_Nc(2 * m, abs(args.c))))
        write_csv(args.out, ["m", "d", "delta"], rows)
        return EXIT_OK

    if args.m is None:
        raise UsageError("give --m (with optional --n and --c-grid) or --m-range with --c")
    if args.c is not None:
        raise UsageError("--c belongs to the --m-range mode; use --c-grid")
    n = args.m if args.n is None else args.n
    grid = zero_distance_grid(args.m + n) if args.c_grid is None else c_grid_from(args.c_grid)
    write_csv(args.out, ["c", "d", "delta"], zero_distance_rows(args.m, n, grid, opts))
    return EXIT_OK


# verify


def cmd_verify(args) -> int:
    report = run_suite(args.suite, args.m, args.n, args.c, solver_options(args))
    with _output(args.out) as fh:
        fh.write(report.to_json() if args.format == "json" else report.to_table())
    return EXIT_OK if report.all_passed else EXIT_FAILED


def _add_solver_flags(p):
    g = p.add_argument_group("solver")
    g.add_argument("--tol", type=float, default=SolverOptions.tol, help="Aberth correction tolerance")
    g.add_argument("--max-iter", type=int, default=SolverOptions.max_iter)
    g.add_argument("--precision", choices=("double", "extended"), default="double")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pencil-spectra",
        description="Spectra of the indefinite tridiagonal pencil H_{N;c} - lambda D_{m,n}.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="all eigenvalues of one pencil")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=float, default=0.0)
    p.add_argument("--scaled", action="store_true", help="add (u, v) = (Re, N Im) columns")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default="-")
    _add_solver_flags(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("curve", help="samples of the bounding curve")
    p.add_argument("--c", type=float, required=True)
    p.add_argument("--samples", type=int, default=2000)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("sweep", help="one spectrum per c-frame for m = n")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--c-from", type=float, required=True)
    p.add_argument("--c-to", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--out-dir", required=True)
    p.add_argument("--jobs", type=int, default=1)
    _add_solver_flags(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("zero-distance", help="distance of the spectrum to 0 against its lower bound")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--c-grid", help="start:stop:step (default: 400-point grid on [0, 2.05])")
    p.add_argument("--m-range", help="first:last, with n = m")
    p.add_argument("--c", type=float)
    p.add_argument("--out", default="-")
    _add_solver_flags(p)
    p.set_defaults(func=cmd_zero_distance)

    p = sub.add_parser("verify", help="run a check suite")
    p.add_argument("--suite", choices=sorted(SUITES), default="all")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--c", type=float)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--out", default="-")
    _add_solver_flags(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, KeyError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
