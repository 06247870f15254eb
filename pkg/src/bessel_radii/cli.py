"""Command-line front end.

    bessel-radii radius --kind g --property convex --nu 3.5 --n 1 --beta 0.5
    bessel-radii table --which 1 --format text
    bessel-radii verify

Exit codes: 0 success, 2 invalid input, 3 numeric failure, 4 verification failure.
Machine formats (json, csv) carry floats at 12 significant digits; tables in text
form are shown at 4 decimals.  Radii of h are in the variable of h, i.e. the square
of the Bessel argument; pass ``--bessel-argument`` to get the square root instead.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from . import rayleigh, zeros
from .errors import BesselRadiiError, DomainError, LengthError, LengthMismatch
from .radii import convex_radius, starlike_radius
from .series import Params, TruncationPolicy, eval_bessel_deriv, eval_normalized
from .tables import TABLES, run_table
from .verify import DEFAULT_GRID_NU, run_verify

EXIT_OK, EXIT_INVALID, EXIT_NUMERIC, EXIT_VERIFY = 0, 2, 3, 4
SIG_DIGITS = 12
VALIDATION_ERRORS = (DomainError, LengthError, LengthMismatch, ValueError, TypeError)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def canonical(x):
    """Round floats to SIG_DIGITS significant digits, recursively; non-finite -> None."""
    if isinstance(x, float):
        return float(f"{x:.{SIG_DIGITS}g}") if math.isfinite(x) else None
    if isinstance(x, dict):
        return {k: canonical(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [canonical(v) for v in x]
    return x


def to_json(obj) -> str:
    return json.dumps(canonical(obj), sort_keys=True)


def to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    if rows:
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\r\n")
        writer.writeheader()
        writer.writerows(canonical(rows))
    return buf.getvalue()


def _truncation(args) -> TruncationPolicy:
    kw = {}
    if args.rel_tol is not None:
        if not args.rel_tol > 0:
            raise DomainError("--rel-tol must be positive")
        kw["rel_tol"] = args.rel_tol
    if args.max_terms is not None:
        if args.max_terms < 1:
            raise DomainError("--max-terms must be at least 1")
        kw["max_terms"] = args.max_terms
    return TruncationPolicy(**kw)


def _params(args) -> Params:
    return Params(args.nu, args.n, args.beta)


def _envelope(command, p, result, bracket=None, residual=None, warnings=()):
    return {"command": command,
            "params": {"nu": p.nu, "n": p.n, "beta": p.beta},
            "result": result, "bracket": list(bracket) if bracket else None,
            "residual": residual, "warnings": list(warnings)}


# ---------------------------------------------------------------- commands
# Each returns (envelope, csv rows, text).

def cmd_eval(args):
    p, trunc = _params(args), _truncation(args)
    if args.kind == "J":
        value = eval_bessel_deriv(p, args.z, trunc)
    else:
        value = eval_normalized(args.kind, p, args.z, trunc)
    env = _envelope("eval", p, value)
    row = {"kind": args.kind, "nu": p.nu, "n": p.n, "z": args.z, "value": value}
    return env, [row], f"{args.kind}(nu={p.nu}, n={p.n}; {args.z}) = {value:.15g}"


def cmd_zeros(args):
    p = _params(args)
    if args.count < 1:
        raise DomainError("--count must be at least 1")
    seq = zeros.find_zeros(args.which, p, args.count)
    warnings = []
    if seq.variable == "x":
        warnings.append(f"zeros of {args.which} are in the variable of h (squared Bessel argument)")
    env = _envelope("zeros", p, list(seq.zeros), warnings=warnings)
    env["brackets"] = [list(b) for b in seq.brackets]
    rows = [{"which": args.which, "nu": p.nu, "n": p.n, "index": i + 1, "zero": z}
            for i, z in enumerate(seq.zeros)]
    text = "\n".join(f"{i + 1:4d}  {z:.15g}" for i, z in enumerate(seq.zeros))
    return env, rows, text


def cmd_radius(args):
    p, trunc = _params(args), _truncation(args)
    solver = starlike_radius if args.property == "starlike" else convex_radius
    res = solver(args.kind, p, trunc)
    value, bracket = res.radius, res.bracket
    warnings = []
    if args.kind == "h":
        if args.bessel_argument:
            value, bracket = res.in_bessel_argument(), tuple(math.sqrt(b) for b in bracket)
            warnings.append("h radius converted to the Bessel argument (square root)")
        else:
            warnings.append("h radius is in the variable of h (squared Bessel argument)")
    if res.branch == "modified":
        warnings.append("modified branch: nu lies between n - 1 and n")
    env = _envelope("radius", p, value, bracket, res.residual, warnings)
    env["branch"] = res.branch
    row = {"kind": args.kind, "property": args.property, "nu": p.nu, "n": p.n, "beta": p.beta,
           "radius": value, "bracket_lo": bracket[0], "bracket_hi": bracket[1],
           "residual": res.residual, "branch": res.branch}
    text = (f"{args.property} radius of {args.kind} (nu={p.nu}, n={p.n}, beta={p.beta}): "
            f"{value:.15g}  [residual {res.residual:.2e}, {res.branch} branch]")
    return env, [row], text


def cmd_bounds(args):
    p = _params(args)
    b = rayleigh.radius_bounds(args.target, p)
    result = {"lower": b.lower, "upper": b.upper, "extra_upper": b.extra_upper}
    warnings = ["h bounds are in the variable of h"] if args.target.endswith("h") else []
    env = _envelope("bounds", p, result, warnings=warnings)
    row = {"target": args.target, "nu": p.nu, "n": p.n, **result}
    text = f"{b.lower:.12g} < r({args.target}) < {b.upper:.12g}"
    if b.extra_upper is not None:
        text += f"   (also r < {b.extra_upper:.12g})"
    return env, [row], text


def cmd_sums(args):
    p = _params(args)
    if args.family == "j":
        first, second = rayleigh.zero_power_sum(p, 2), rayleigh.zero_power_sum(p, 4)
    else:
        first, second = rayleigh.auxiliary_sums(args.family, p)
    result = {first.family: first.value, second.family: second.value}
    rows = [{"family": s.family, "nu": p.nu, "n": p.n, "value": s.value} for s in (first, second)]
    if args.numeric:
        num = rayleigh.numeric_sums(args.family, p, args.count)
        for row, v in zip(rows, num):
            row["numeric"] = v
        result.update({f"{first.family}_numeric": num[0], f"{second.family}_numeric": num[1]})
    env = _envelope("sums", p, result)
    text = "\n".join(f"{r['family']:>7} = {r['value']:.15g}" +
                     (f"   numeric {r['numeric']:.15g}" if "numeric" in r else "") for r in rows)
    return env, rows, text


def cmd_table(args):
    which = {"1": "starlike", "2": "convex"}.get(args.which, args.which)
    nu = TABLES[which][0]
    cells = run_table(which)
    rows = []
    for c in cells:
        dev = None if c.computed is None else abs(c.computed - c.published)
        rows.append({"kind": c.kind, "n": c.n, "beta": c.beta, "computed": c.computed,
                     "published": c.published, "deviation": dev, "matches": c.matches,
                     "anomaly": c.anomaly, "note": c.note})
    warnings = [c.note for c in cells if c.anomaly or c.computed is None]
    env = _envelope("table", Params(nu), rows, warnings=warnings)
    env["params"].pop("beta")
    return env, rows, _render_table(which, nu, cells)


def _render_table(which, nu, cells) -> str:
    lookup = {(c.kind, c.n, c.beta): c for c in cells}
    head = f"{which} radii, nu = {nu} (computed / published)"
    cols = [(k, b) for k in "fgh" for b in (0.0, 0.5)]
    lines = [head, "     " + "".join(f"{k} b={b:<3}".rjust(20) for k, b in cols)]
    for n in range(4):
        parts = []
        for k, b in cols:
            c = lookup[(k, n, b)]
            val = "fail" if c.computed is None else f"{c.computed:.4f}"
            flag = "*" if c.anomaly else ("" if c.matches else "!")
            parts.append(f"{val}/{c.published:.4f}{flag}".rjust(20))
        lines.append(f"n={n}  " + "".join(parts))
    notes = [f"* {c.kind} n={c.n} beta={c.beta}: {c.note}" for c in cells if c.anomaly]
    return "\n".join(lines + notes)


def cmd_verify(args):
    grid = DEFAULT_GRID_NU if args.grid_nu is None else tuple(args.grid_nu)
    suites = run_verify(grid)
    result = {s.name: {"passed": s.passed, "total": s.total, "failures": s.failures} for s in suites}
    env = _envelope("verify", Params(grid[0]), result)
    env["params"] = {"grid_nu": list(grid)}
    rows = [{"suite": s.name, "passed": s.passed, "total": s.total, "ok": s.ok} for s in suites]
    text = "\n".join(f"{'PASS' if s.ok else 'FAIL'}  {s.name:<18} {s.passed}/{s.total}"
                     + "".join(f"\n      {f}" for f in s.failures) for s in suites)
    env["_ok"] = all(s.ok for s in suites)
    return env, rows, text


def _float_list(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--nu", type=float, default=2.5)
    common.add_argument("--n", type=int, default=0)
    common.add_argument("--beta", type=float, default=0.0)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--rel-tol", type=float, default=None, help="series relative tolerance")
    common.add_argument("--max-terms", type=int, default=None, help="series term cap")

    parser = _Parser(prog="bessel-radii", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", parents=[common], help="evaluate J^(n), f, g or h")
    p.add_argument("--kind", choices=("J", "f", "g", "h"), default="J")
    p.add_argument("--z", type=float, required=True)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("zeros", parents=[common], help="positive zeros")
    p.add_argument("--which", choices=sorted(zeros.FAMILIES), default="J-deriv")
    p.add_argument("--count", type=int, default=5)
    p.set_defaults(func=cmd_zeros)

    p = sub.add_parser("radius", parents=[common], help="radius of starlikeness or convexity")
    p.add_argument("--kind", choices=("f", "g", "h"), required=True)
    p.add_argument("--property", choices=("starlike", "convex"), default="starlike")
    p.add_argument("--bessel-argument", action="store_true",
                   help="report h radii as the Bessel argument (square root)")
    p.set_defaults(func=cmd_radius)

    p = sub.add_parser("bounds", parents=[common], help="Euler-Rayleigh radius bounds")
    p.add_argument("--target", choices=rayleigh.TARGETS, required=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("sums", parents=[common], help="reciprocal power sums of zeros")
    p.add_argument("--family", choices=("j", "sigma", "rho", "kappa", "omega"), default="j")
    p.add_argument("--numeric", action="store_true", help="also sum computed zeros")
    p.add_argument("--count", type=int, default=200)
    p.set_defaults(func=cmd_sums)

    p = sub.add_parser("table", parents=[common], help="recompute a published grid")
    p.add_argument("--which", choices=("1", "2", "starlike", "convex"), default="1")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", parents=[common], help="run the self-check suites")
    p.add_argument("--grid-nu", type=_float_list, default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def _emit_error(kind: str, message: str, command=None) -> None:
    print(to_json({"command": command, "error": {"type": kind, "message": message}}),
          file=sys.stderr)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        _emit_error("UsageError", str(exc))
        return EXIT_INVALID
    try:
        env, rows, text = args.func(args)
    except BesselRadiiError as exc:
        code = EXIT_INVALID if isinstance(exc, VALIDATION_ERRORS) else EXIT_NUMERIC
        _emit_error(type(exc).__name__, str(exc), args.command)
        return code
    except (ValueError, TypeError) as exc:
        _emit_error(type(exc).__name__, str(exc), args.command)
        return EXIT_INVALID
    ok = env.pop("_ok", True)
    if args.format == "json":
        print(to_json(env))
    elif args.format == "csv":
        sys.stdout.write(to_csv(rows))
    else:
        print(text)
    return EXIT_OK if ok else EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
