"""Command line front end.

Numbers are written as comma-separated coordinates ``x0,x1,...,x_{n-1}``;
n is inferred from the count. Exit codes: 0 success, 2 usage or domain
error, 3 numerical failure.
"""
import argparse
import math
import sys

import numpy as np

from . import elementary
from .canonical import to_canonical
from .core import PolarNComplex, add, amplitude, inverse, mul, modulus, nu
from .cosexp import g_closed
from .errors import (
    DegenerateDirection,
    NoConvergence,
    Overflow,
    PointOnPath,
    PolarNComplexError,
)
from .geometry import polar_decompose
from .integration import ClosedPath, cauchy_eval, contour_integral, residue_value
from .polynomial import DEFAULT_CAP, NPolynomial, enumerate_rootsets

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC = 0, 2, 3
NUMERIC_ERRORS = (NoConvergence, PointOnPath, Overflow)

UNARY = {
    "inv": inverse,
    "exp": elementary.exp,
    "log": elementary.log,
    "sin": elementary.sin,
    "cos": elementary.cos,
    "sinh": elementary.sinh,
    "cosh": elementary.cosh,
}
BINARY = {"add": add, "mul": mul}
EVAL_OPS = set(UNARY) | set(BINARY) | {"pow"}


class UsageError(Exception):
    pass


def parse_literal(text):
    try:
        values = [float(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"bad number literal {text!r}") from None
    if len(values) < 2:
        raise UsageError(f"literal {text!r} needs at least 2 coordinates")
    if not all(math.isfinite(v) for v in values):
        raise UsageError(f"literal {text!r} has non-finite coordinates")
    return PolarNComplex(values)


def format_real(value, digits):
    s = format(float(value), f".{digits}g")
    return "0" if s in ("-0", "0") else s


def format_literal(u, digits=12):
    return ",".join(format_real(v, digits) for v in u.x)


def read_path(filename):
    vertices = []
    with open(filename, encoding="utf-8") as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if line:
                vertices.append(parse_literal(line))
    try:
        return ClosedPath(tuple(vertices))
    except ValueError as exc:
        raise UsageError(f"path file {filename}: {exc}") from None


def _same_n(*values):
    if len({v.n for v in values}) > 1:
        raise UsageError("literals have different dimensions")


def cmd_eval(args, out):
    a = parse_literal(args.a)
    if args.op in BINARY:
        b = parse_literal(args.b)
        _same_n(a, b)
        result = BINARY[args.op](a, b)
    elif args.op == "pow":
        result = elementary.pow(a, args.m)
    else:
        result = UNARY[args.op](a)
    print(format_literal(result, args.digits), file=out)


def cmd_decompose(args, out):
    u = parse_literal(args.u)
    dg = args.digits
    c = to_canonical(u)
    lines = [f"v_plus={format_real(c.v_plus, dg)}"]
    if c.v_minus is not None:
        lines.append(f"v_minus={format_real(c.v_minus, dg)}")
    for k, (a, b) in enumerate(c.pairs, start=1):
        lines.append(f"v_{k}={format_real(a, dg)}")
        lines.append(f"vt_{k}={format_real(b, dg)}")
    v = nu(u)
    lines.append(f"nu={format_real(v, dg)}")
    lines.append(f"d={format_real(modulus(u), dg)}")
    if v > 0:
        lines.append(f"rho={format_real(amplitude(u), dg)}")
    try:
        form = polar_decompose(u)
    except DegenerateDirection as exc:
        lines.append(f"note={exc}")
    else:
        lines.append(f"theta_plus={format_real(form.theta_plus, dg)}")
        if form.theta_minus is not None:
            lines.append(f"theta_minus={format_real(form.theta_minus, dg)}")
        join = lambda seq: ",".join(format_real(t, dg) for t in seq)
        lines.append(f"psi=[{join(form.psi)}]")
        lines.append(f"phi=[{join(form.phi)}]")
        lines.append(f"rho_k=[{join(form.rho_k)}]")
    print("\n".join(lines), file=out)


def cmd_cosexp(args, out, err):
    n = args.n
    if n < 2:
        raise UsageError("--n must be >= 2")
    if not args.step > 0:
        raise UsageError("--step must be positive")
    ks = list(range(n)) if args.k is None else [args.k]
    if any(not 0 <= k < n for k in ks):
        raise UsageError(f"--k must be in 0..{n - 1}")
    count = int(math.floor((args.stop - args.start) / args.step + 1e-9)) + 1
    if count < 1:
        raise UsageError("empty y range")
    dg = args.digits
    out.write(",".join(["y"] + [f"g_n{k}" for k in ks]) + "\n")
    worst = 0.0
    for i in range(count):
        y = args.start + i * args.step
        row = [g_closed(n, k, y) for k in ks]
        out.write(",".join(format_real(v, dg) for v in [y] + row) + "\n")
        if args.verify:
            total = sum(g_closed(n, k, y) for k in range(n))
            worst = max(worst, abs(total - math.exp(y)) / math.exp(y))
    if args.verify:
        err.write(f"max_row_sum_deviation={format_real(worst, 6)}\n")


def cmd_factor(args, out):
    parts = [p for p in args.coeffs.split(";") if p.strip()]
    if not parts:
        raise UsageError("--coeffs needs at least one coefficient")
    coeffs = tuple(parse_literal(p.strip()) for p in parts)
    _same_n(*coeffs)
    if args.n is not None and args.n != coeffs[0].n:
        raise UsageError(f"--n {args.n} disagrees with literal length {coeffs[0].n}")
    result = enumerate_rootsets(NPolynomial(coeffs), cap=args.cap)
    if result.total is None:
        print(f"count>={len(result.rootsets)}", file=out)
    else:
        print(f"count={result.total}", file=out)
    if result.truncated:
        print("truncated=true", file=out)
    for i, rs in enumerate(result.rootsets, start=1):
        print(f"# rootset {i}", file=out)
        for r in rs.roots:
            print(format_literal(r, args.digits), file=out)


def cmd_integrate(args, out):
    u0 = parse_literal(args.pole)
    path = read_path(args.path)
    _same_n(u0, path.vertices[0])
    fn = elementary.exp if args.fn == "exp" else (lambda u: PolarNComplex.one(u.n))
    closed = cauchy_eval(fn, u0, path) if args.fn == "exp" else residue_value(u0, path)
    numeric = contour_integral(lambda u: fn(u) * inverse(u - u0), path, args.steps)
    dev = float(np.max(np.abs(numeric.x - closed.x)))
    print(f"numeric={format_literal(numeric, args.digits)}", file=out)
    print(f"closed_form={format_literal(closed, args.digits)}", file=out)
    print(f"deviation={format_real(dev, 6)}", file=out)


def build_parser():
    parser = argparse.ArgumentParser(prog="polarnc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for op in sorted(EVAL_OPS):
        p = sub.add_parser(op, help=f"evaluate {op}")
        p.add_argument("a")
        if op in BINARY:
            p.add_argument("b")
        if op == "pow":
            p.add_argument("m", type=float)
        p.add_argument("--digits", type=int, default=12)
        p.set_defaults(func=cmd_eval, op=op)

    p = sub.add_parser("decompose", help="canonical and polar coordinates")
    p.add_argument("u")
    p.add_argument("--digits", type=int, default=12)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("cosexp", help="CSV table of the cosexponential functions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--from", dest="start", type=float, default=-1.0)
    p.add_argument("--to", dest="stop", type=float, default=1.0)
    p.add_argument("--step", type=float, default=0.25)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--digits", type=int, default=17)
    p.set_defaults(func=cmd_cosexp)

    p = sub.add_parser("factor", help="root sets of a monic polynomial")
    p.add_argument("--coeffs", required=True, help="a_1;a_2;...;a_m as literals")
    p.add_argument("--n", type=int)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--digits", type=int, default=12)
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("integrate", help="loop integral of f(u)/(u - u0)")
    p.add_argument("--pole", required=True)
    p.add_argument("--path", required=True)
    p.add_argument("--fn", choices=["one", "exp"], default="one")
    p.add_argument("--steps", type=int, default=16)
    p.add_argument("--digits", type=int, default=12)
    p.set_defaults(func=cmd_integrate)
    return parser


def _protect_negative_literals(argv):
    """Let literals such as ``-1,0,0`` pass as positionals."""
    out = []
    for tok in argv:
        if len(tok) > 1 and tok[0] == "-" and (tok[1].isdigit() or tok[1] == "."):
            out.append(f" {tok}")
        else:
            out.append(tok)
    return out


def main(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_protect_negative_literals(argv))
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.func is cmd_cosexp:
            args.func(args, out, err)
        else:
            args.func(args, out)
    except UsageError as exc:
        err.write(f"UsageError: {exc}\n")
        return EXIT_USAGE
    except NUMERIC_ERRORS as exc:
        err.write(f"{exc}\n")
        return EXIT_NUMERIC
    except PolarNComplexError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        err.write(f"UsageError: {exc}\n")
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
