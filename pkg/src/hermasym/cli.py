"""Command-line front end: accuracy, zeros and limit tables as CSV or JSON.

Exit codes: 0 success, 2 bad arguments, 3 domain or truncation error.
"""

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from . import __version__
from .charlier_asym import charlier_eval_asym
from .exactpoly import CapabilityError, CharlierPoint, charlier_exact_sum, hermite_exact_sum
from .fidelity import Fidelity
from .hermite_asym import RegionTag, hermite_eval_asym, monomial_regime, szego_leading
from .logreal import MAX_PLAIN_LOG
from .zeros import KapteynTruncationError, Method, zero_estimates

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3

HERMITE_FIELDS = ["n", "xi", "region", "method", "sign", "log_abs", "value",
                  "exact_log_abs", "rel_err"]
CHARLIER_FIELDS = ["n", "a", "x", "region", "method", "sign", "log_abs", "value",
                   "exact_log_abs", "rel_err"]
LIMIT_FIELDS = ["n", "xi", "a", "x", "sign", "log_abs", "value", "exact_log_abs",
                "log_err", "err"]

_METHODS = {
    "II": RegionTag.II_LEFT_OUTER,
    "III": RegionTag.III_RIGHT_OUTER,
    "IV": RegionTag.IV_LEFT_AIRY,
    "V": RegionTag.V_RIGHT_AIRY,
    "VI": RegionTag.VI_OSCILLATORY,
}


class DomainError(Exception):
    """Raised inside a command to exit with status 3."""


# ---------------------------------------------------------------------------
# formatting
# ---------------------------------------------------------------------------


def _csv_cell(v):
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _json_value(v):
    if isinstance(v, float) and not math.isfinite(v):
        return None
    return v


def write_records(records, fields, fmt, out):
    if fmt == "json":
        rows = [{k: _json_value(r.get(k)) for k in fields} for r in records]
        out.write(json.dumps(rows, indent=1, allow_nan=False))
        out.write("\n")
        return
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(fields)
    for r in records:
        w.writerow([_csv_cell(r.get(k)) for k in fields])
    out.write(buf.getvalue())


def parse_csv(text):
    """Read CLI CSV back into records with numbers restored (used by tests)."""
    rows = []
    for raw in csv.DictReader(io.StringIO(text)):
        row = {}
        for k, v in raw.items():
            if v == "":
                row[k] = None
                continue
            try:
                row[k] = int(v)
            except ValueError:
                try:
                    row[k] = float(v)
                except ValueError:
                    row[k] = v
        rows.append(row)
    return rows


def _value_fields(v):
    return {
        "sign": v.sign,
        "log_abs": None if v.sign == 0 else float(v.log_abs),
        "value": v.to_float() if (v.sign == 0 or abs(v.log_abs) < MAX_PLAIN_LOG) else None,
    }


def _compare(approx, exact):
    rec = _value_fields(approx)
    rec["exact_log_abs"] = None if exact.sign == 0 else float(exact.log_abs)
    rec["rel_err"] = float(approx.rel_err(exact))
    return rec


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _hermite_record(n, xi, method, fidelity, band_width):
    if method == "monomial":
        approx = monomial_regime(n, xi)
        region, formula = RegionTag.I_SMALL_N, "monomial"
    elif method == "szego":
        root = math.sqrt(2.0 * n)
        if n < 1 or not abs(xi) < root:
            raise ValueError(f"szego leading term needs n >= 1 and |xi| < sqrt(2n), got xi={xi}")
        approx = szego_leading(n, xi)
        region, formula = RegionTag.VI_OSCILLATORY, "szego_leading"
    else:
        forced = None if method == "auto" else _METHODS[method]
        res = hermite_eval_asym(n, xi, fidelity, band_width, forced_region=forced)
        approx, region, formula = res.value, res.region.tag, res.formula
    rec = {"n": n, "xi": float(xi), "region": region.value, "method": formula}
    rec.update(_compare(approx, hermite_exact_sum(n, xi)))
    return rec


def cmd_eval(args, out):
    rec = _hermite_record(args.n, args.xi, args.method, args.fidelity, args.band_width)
    write_records([rec], HERMITE_FIELDS, args.format, out)


def cmd_sweep(args, out):
    grid = np.linspace(args.xi_min, args.xi_max, args.steps)
    records = [_hermite_record(args.n, float(x), "auto", args.fidelity, args.band_width)
               for x in grid]
    write_records(records, HERMITE_FIELDS, args.format, out)


def cmd_zeros(args, out):
    tol, max_terms = args.tol, args.max_terms
    if args.method == "both":
        newton = zero_estimates(args.n, Method.NEWTON, polish=args.compare_exact)
        kapteyn = zero_estimates(args.n, Method.KAPTEYN, tol=tol, max_terms=max_terms)
        fields = ["n", "j", "tau_newton", "zeta_newton", "residual_newton", "tau_kapteyn",
                  "zeta_kapteyn", "residual_kapteyn", "terms_used", "tau_diff"]
        records = []
        for a, b in zip(newton, kapteyn):
            records.append({
                "n": a.n, "j": a.j, "tau_newton": a.tau, "zeta_newton": a.zeta,
                "residual_newton": a.residual, "tau_kapteyn": b.tau,
                "zeta_kapteyn": b.zeta, "residual_kapteyn": b.residual,
                "terms_used": b.terms_used, "tau_diff": abs(a.tau - b.tau),
                "exact_zeta": a.exact, "abs_err": a.abs_err,
            })
    else:
        rows = zero_estimates(args.n, Method(args.method), tol=tol, max_terms=max_terms,
                              polish=args.compare_exact)
        fields = ["n", "j", "method", "tau", "zeta", "residual", "terms_used"]
        records = [{
            "n": r.n, "j": r.j, "method": r.method.value, "tau": r.tau, "zeta": r.zeta,
            "residual": r.residual, "terms_used": r.terms_used,
            "exact_zeta": r.exact, "abs_err": r.abs_err,
        } for r in rows]
    if args.compare_exact:
        fields = fields + ["exact_zeta", "abs_err"]
    write_records(records, fields, args.format, out)


def cmd_limit(args, out):
    n, xi = args.n, args.xi
    if any(not a > 0 for a in args.a_list):
        raise DomainError(f"every a must be positive, got {args.a_list}")
    exact = hermite_exact_sum(n, xi)
    records = []
    for a in args.a_list:
        x = a + xi * math.sqrt(2.0 * a)
        c = charlier_exact_sum(CharlierPoint(n, a, x))
        scaled = c.scale_log(0.5 * n * math.log(2.0 * a))
        if n % 2:
            scaled = -scaled
        diff = scaled - exact
        log_err = None if diff.sign == 0 else float(diff.log_abs)
        err = 0.0 if diff.sign == 0 else (math.exp(log_err) if log_err < 709 else math.inf)
        rec = {"n": n, "xi": float(xi), "a": float(a), "x": float(x)}
        rec.update(_value_fields(scaled))
        rec["exact_log_abs"] = None if exact.sign == 0 else float(exact.log_abs)
        rec["log_err"] = log_err
        rec["err"] = err
        records.append(rec)
    write_records(records, LIMIT_FIELDS, args.format, out)


def cmd_charlier(args, out):
    p = CharlierPoint(args.n, args.a, args.x)
    value, region, formula = charlier_eval_asym(
        p, args.fidelity, args.band_width, small_n_max=args.small_n_max)
    rec = {"n": p.n, "a": p.a, "x": p.x, "region": region.tag.value, "method": formula}
    rec.update(_compare(value, charlier_exact_sum(p)))
    write_records([rec], CHARLIER_FIELDS, args.format, out)


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _a_list(text):
    try:
        vals = [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {text!r}")
    if not vals:
        raise argparse.ArgumentTypeError("empty a-list")
    return vals


def _positive_int(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {text}")
    return v


def _nonneg_int(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected an integer >= 0, got {text}")
    return v


def _finite(text):
    v = float(text)
    if not math.isfinite(v):
        raise argparse.ArgumentTypeError(f"expected a finite number, got {text}")
    return v


def _add_global_flags(p, suppress):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--format", choices=["csv", "json"], default=d("csv"))
    p.add_argument("--fidelity", choices=["corrected", "as-printed"], default=d("corrected"))
    p.add_argument("--band-width", type=_finite, default=d(1.0),
                   help="Airy band width constant (default 1.0)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hermasym",
        description="Asymptotic Hermite/Charlier evaluation and Hermite zero estimates, "
                    "scored against exact oracles.")
    parser.add_argument("--version", action="version", version=__version__)
    _add_global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _add_global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="one Hermite value vs the exact oracle")
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.add_argument("--xi", type=_finite, required=True)
    p.add_argument("--method", default="auto",
                   choices=["auto", "II", "III", "IV", "V", "VI", "monomial", "szego"])
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("sweep", parents=[common], help="auto-dispatched Hermite values on a grid")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--xi-min", type=_finite, required=True)
    p.add_argument("--xi-max", type=_finite, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("zeros", parents=[common], help="Hermite zero estimates")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--method", choices=["newton", "kapteyn", "both"], default="newton")
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--max-terms", type=_positive_int, default=None)
    p.add_argument("--compare-exact", action="store_true")
    p.set_defaults(func=cmd_zeros)

    p = sub.add_parser("limit", parents=[common],
                       help="scaled Charlier value against H_n as a grows")
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.add_argument("--xi", type=_finite, required=True)
    p.add_argument("--a-list", type=_a_list, required=True)
    p.set_defaults(func=cmd_limit)

    p = sub.add_parser("charlier", parents=[common],
                       help="one Charlier value vs the exact sum")
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.add_argument("--a", type=_finite, required=True)
    p.add_argument("--x", type=_finite, required=True)
    p.add_argument("--small-n-max", type=_nonneg_int, default=0,
                   help="degrees up to this use the (1 - x/a)^n form (default 0)")
    p.set_defaults(func=cmd_charlier)
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "sweep" and (args.steps < 2 or not args.xi_min < args.xi_max):
        parser.error("sweep needs --steps >= 2 and --xi-min < --xi-max")
    args.fidelity = Fidelity.parse(args.fidelity)
    buf = io.StringIO()
    try:
        args.func(args, buf)
    except (DomainError, KapteynTruncationError, CapabilityError, ValueError) as exc:
        print(f"hermasym {args.command}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    out.write(buf.getvalue())
    return EXIT_OK


def run():
    sys.exit(main())
