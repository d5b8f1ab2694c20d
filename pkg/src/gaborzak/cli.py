"""Command-line interface.

Every subcommand writes a table: CSV with a header row (default) or JSON of the
form ``{command, config, results, diagnostics}``.  Output depends only on the
flags, so repeated runs are byte-identical.

Exit codes: 0 success, 1 numerical failure, 2 usage or precondition error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction

import numpy as np

from .frameset import RationalDensity, enumerate_counterexamples, estimate_frame_bounds, verify_counterexample
from .hermite import eval_hermite, hermite_roots, root_lower_bound_x1, root_upper_bound, turning_point
from .verify import PASS_TOL, SUITES, run_suite
from .zak import DEFAULT_TOL, hermite_window, zak_auto, zak_direct, zak_poisson_dual
from .zeros import KAPPA_RANGE, KAPPA_STEP, find_zeros, hermite_slice, search_bracket_from_bounds

__all__ = ["main", "build_parser"]


class UsageError(ValueError):
    """Bad flag value; reported with exit code 2."""


def parse_number(text: str) -> Fraction:
    """Exact rational from ``"1/6"``, ``"0.25"`` or ``"3"``."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a number or fraction: {text!r}") from exc


def _real(text: str) -> float:
    return float(parse_number(text))


def _number_list(text: str) -> list[float]:
    return [_real(t) for t in text.split(",") if t.strip()]


def _range2(text: str) -> tuple[float, float]:
    parts = text.split(":") if ":" in text else text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}")
    lo, hi = (_real(p) for p in parts)
    if not lo < hi:
        raise argparse.ArgumentTypeError(f"need LO < HI, got {text!r}")
    return lo, hi


def _int_range(text: str) -> list[int]:
    parts = [int(p) for p in text.split(":")]
    if len(parts) == 1:
        return parts
    if len(parts) not in (2, 3):
        raise argparse.ArgumentTypeError(f"expected START:STOP[:STEP], got {text!r}")
    start, stop = parts[0], parts[1]
    step = parts[2] if len(parts) == 3 else 1
    if step <= 0 or stop < start:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return list(range(start, stop + 1, step))


def _nonneg_int(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("n must be >= 0")
    return v


# --------------------------------------------------------------------------- commands


def cmd_hermite(args):
    n = args.n
    if args.roots:
        r = hermite_roots(n)
        rows = [{"k": k + 1, "root": float(v)} for k, v in enumerate(r.roots)]
        return rows, {"sum_of_squares": float(np.sum(r.roots**2)), "expected": n * (n - 1) / 2}
    if args.bounds:
        rows = [{
            "n": n,
            "lower": root_lower_bound_x1(n),
            "largest_root": float(hermite_roots(n).x1),
            "upper": root_upper_bound(n, 1),
            "turning_point": turning_point(n),
        }]
        return rows, {}
    xs = args.x if args.x is not None else [0.0]
    vals = eval_hermite(n, np.asarray(xs, dtype=float))
    return [{"x": float(x), "value": float(v)} for x, v in zip(xs, np.atleast_1d(vals))], {}


_ZAK_METHODS = {"auto": zak_auto, "direct": zak_direct, "poisson-dual": zak_poisson_dual}


def cmd_zak(args):
    w = hermite_window(args.n)
    z = _ZAK_METHODS[args.method](w, args.lam, args.x, args.gamma, args.tol)
    v = complex(z.value)
    row = {"real": v.real, "imag": v.imag, "abs": abs(v), "method": z.method,
           "truncation_terms": z.truncation_terms, "tail_bound": z.tail_bound}
    return [row], {}


def cmd_zeros(args):
    sl = hermite_slice(args.n, args.x0, args.gamma0, args.s, args.tol)
    zeros = find_zeros(sl, args.kappa_range, args.step)
    diag = {"s": sl.s, "symmetry": None if sl.symmetry is None else sl.symmetry.characteristic}
    if args.count_only:
        return [{"n": args.n, "x0": str(args.x0), "gamma0": str(args.gamma0), "count": len(zeros)}], diag
    rows = [{"index": i, "kappa": z.kappa, "lambda": z.lam, "residual": z.residual}
            for i, z in enumerate(zeros)]
    return rows, diag


def cmd_slice(args):
    sl = hermite_slice(args.n, args.x0, args.gamma0, args.s, args.tol)
    kap, F = sl.grid(args.kappa_range[0], args.kappa_range[1], args.step)
    return [{"kappa": float(k), "F": float(f)} for k, f in zip(kap, F)], {"s": sl.s}


def cmd_counterexamples(args):
    cs = enumerate_counterexamples(args.n, expand=args.expand, verify_tol=args.verify_tol)
    w = hermite_window(args.n)
    rows = []
    for c in cs:
        if not verify_counterexample(c, w, args.verify_tol):
            raise ArithmeticError(f"counterexample at alpha={c.alpha!r} failed re-verification")
        rows.append({"alpha": c.alpha, "beta": c.beta, "density": str(c.density),
                     "derivation": c.derivation, "lambda": c.lam, "kappa": c.source_zero.kappa,
                     "x0": str(Fraction(c.source_zero.x0).limit_denominator(1000)),
                     "gamma0": str(Fraction(c.source_zero.gamma0).limit_denominator(1000))})
    return rows, {"count": len(rows)}


def cmd_bounds(args):
    rows = []
    for n in args.n_range:
        lower, upper = search_bracket_from_bounds(n, args.x0)
        gamma0 = Fraction(1, 2) if n % 2 == 0 else Fraction(0)
        sl = hermite_slice(n, args.x0, gamma0, tol=args.tol)
        zeros = find_zeros(sl, args.kappa_range, args.step)
        if not zeros:
            raise ArithmeticError(f"no zero found for n={n} in kappa range {args.kappa_range}")
        lam1 = max(z.lam for z in zeros)
        rows.append({"n": n, "lower": lower, "lambda_largest": lam1, "upper": upper,
                     "inside": bool(lower < lam1 < upper)})
    return rows, {}


def cmd_verify(args):
    names = [s.strip() for s in args.suites.split(",") if s.strip()]
    unknown = [s for s in names if s not in SUITES]
    if unknown:
        raise UsageError(f"unknown suite(s) {', '.join(unknown)}; choose from {', '.join(SUITES)}")
    rows = []
    for s in names:
        r = run_suite(s, args.n_max, args.tol)
        rows.append({"suite": s, "n_max": r.n_max, "max_deviation": r.max_deviation,
                     "checks": r.checks, "status": "PASS" if r.passed else "FAIL"})
    return rows, {"pass_tol": PASS_TOL}


def cmd_frame(args):
    if args.alpha <= 0 or args.beta <= 0:
        raise UsageError("alpha and beta must be positive")
    density = RationalDensity.from_product(args.alpha * args.beta)
    fb = estimate_frame_bounds(hermite_window(args.n), args.alpha, args.beta, args.grid, args.tol,
                               density=density, refine=args.refine)
    row = {"A_est": fb.A, "B_est": fb.B, "argmin_x": fb.argmin[0], "argmin_gamma": fb.argmin[1],
           "density": str(fb.density), "grid": fb.grid_n, "grid_A": fb.grid_A, "grid_B": fb.grid_B}
    diag = {}
    if fb.row_norm is not None:
        diag["row_norm_min"], diag["row_norm_max"] = fb.row_norm
    return [row], diag


# --------------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=_real, default=DEFAULT_TOL,
                        help=f"series truncation tolerance (default {DEFAULT_TOL:g})")
    common.add_argument("--format", choices=("csv", "json"), default="csv", help="output format (default csv)")
    common.add_argument("--output", metavar="FILE", help="write to FILE instead of stdout")

    parser = argparse.ArgumentParser(prog="gaborzak", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hermite", parents=[common], help="evaluate h_n, its roots or root bounds")
    p.add_argument("--n", type=_nonneg_int, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--x", type=_number_list, help="comma-separated points (default 0)")
    g.add_argument("--roots", action="store_true", help="roots of H_n, descending")
    g.add_argument("--bounds", action="store_true", help="bounds on the largest root of H_n")
    p.set_defaults(func=cmd_hermite)

    p = sub.add_parser("zak", parents=[common], help="Z_lambda h_n(x, gamma)")
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.add_argument("--lambda", dest="lam", type=_real, required=True)
    p.add_argument("--x", type=_real, required=True)
    p.add_argument("--gamma", type=_real, required=True)
    p.add_argument("--method", choices=tuple(_ZAK_METHODS), default="auto", help="default auto")
    p.set_defaults(func=cmd_zak)

    def slice_flags(p):
        p.add_argument("--n", type=_nonneg_int, required=True)
        p.add_argument("--x0", type=parse_number, required=True)
        p.add_argument("--gamma0", type=parse_number, required=True)
        p.add_argument("--s", type=_real, default=None, help="scale (default: natural scale of the slice)")
        p.add_argument("--kappa-range", type=_range2, default=KAPPA_RANGE,
                       help=f"LO:HI, written --kappa-range=LO:HI when LO is negative "
                            f"(default {KAPPA_RANGE[0]:g}:{KAPPA_RANGE[1]:g})")
        p.add_argument("--step", type=_real, default=KAPPA_STEP, help=f"grid step (default {KAPPA_STEP:g})")

    p = sub.add_parser("zeros", parents=[common], help="zeros of the modular slice kappa -> Z_{s 2^kappa} h_n(x0, gamma0)")
    slice_flags(p)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_zeros)

    p = sub.add_parser("slice", parents=[common], help="(kappa, F) series of a modular slice for plotting")
    slice_flags(p)
    p.set_defaults(func=cmd_slice)

    p = sub.add_parser("counterexamples", parents=[common], help="certified non-frame points for h_n")
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.add_argument("--expand", action="store_true", help="add the (beta, alpha) mirror of every point")
    p.add_argument("--verify-tol", type=_real, default=1e-8, help="zero-row tolerance (default 1e-8)")
    p.set_defaults(func=cmd_counterexamples)

    p = sub.add_parser("bounds", parents=[common], help="bounds on the largest slice zero versus the computed one")
    p.add_argument("--n-range", type=_int_range, required=True, help="START:STOP[:STEP], inclusive")
    p.add_argument("--x0", type=parse_number, default=Fraction(1, 4), help="default 1/4")
    p.add_argument("--kappa-range", type=_range2, default=KAPPA_RANGE, help="LO:HI (default -6:6)")
    p.add_argument("--step", type=_real, default=KAPPA_STEP, help=f"grid step (default {KAPPA_STEP:g})")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", parents=[common], help="identity suites with max deviations")
    p.add_argument("--suites", default=",".join(SUITES), help=f"comma-separated subset of {','.join(SUITES)}")
    p.add_argument("--n-max", type=_nonneg_int, default=12, help="default 12")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("frame", parents=[common], help="frame-bound estimate for G(h_n, alpha, beta)")
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.add_argument("--alpha", type=_real, required=True)
    p.add_argument("--beta", type=_real, required=True)
    p.add_argument("--grid", type=int, default=128, help="grid points per axis (default 128)")
    p.add_argument("--refine", action="store_true", help="polish the grid extrema by a local search")
    p.set_defaults(func=cmd_frame)
    return parser


# --------------------------------------------------------------------------- output


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (tuple, list)):
        return [_jsonable(u) for u in v]
    if isinstance(v, np.generic):
        return v.item()
    if isinstance(v, float) and not math.isfinite(v):
        return str(v)
    return v


def render(command: str, config: dict, rows: list[dict], diagnostics: dict, fmt: str) -> str:
    if fmt == "json":
        doc = {
            "command": command,
            "config": {k: _jsonable(v) for k, v in sorted(config.items())},
            "results": [{k: _jsonable(v) for k, v in r.items()} for r in rows],
            "diagnostics": {k: _jsonable(v) for k, v in sorted(diagnostics.items())},
        }
        return json.dumps(doc, indent=2) + "\n"
    buf = io.StringIO()
    if rows:
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    return buf.getvalue()


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = {k: v for k, v in vars(args).items() if k not in ("func", "command", "output", "format")}
    try:
        rows, diag = args.func(args)
    except (ValueError, argparse.ArgumentTypeError) as exc:
        print(f"gaborzak {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"gaborzak {args.command}: numerical failure: {exc}", file=sys.stderr)
        return 1
    text = render(args.command, config, rows, diag, args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.command == "verify" and any(r["status"] == "FAIL" for r in rows):
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
