"""Command-line front end: ``eval``, ``table`` and ``verify``.

Exit codes: 0 success, 1 a verified identity failed, 2 bad arguments or
unknown suite, 3 domain error, 4 output path not writable.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import re
import sys
from fractions import Fraction
from pathlib import Path
from typing import Callable, Sequence

from . import angular as ang
from . import harness
from . import polyfam as pf
from .exact import (
    CelineError,
    HalfInt,
    SqrtRational,
    format_rational,
    parse_halfint,
    parse_rational,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN, EXIT_IO = 0, 1, 2, 3, 4
TABLE_HEADER = ["twice_j1", "twice_j2", "twice_j3", "twice_m1", "twice_m2", "twice_m3", "exact", "decimal"]

_ANGLE = re.compile(r"^\s*([+-]?\d*)\s*\*?\s*pi\s*(?:/\s*(\d+))?\s*$")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """Treats ``-1/2`` and ``-pi/3`` as values rather than option flags."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = _NEGATIVE_VALUE


_NEGATIVE_VALUE = re.compile(r"^-(\d+(/\d+)?|\d*\.\d+([eE][+-]?\d+)?|\d*\*?pi(/\d+)?)$")


# ---------------------------------------------------------------------------
# argument types

def _typed(parse: Callable, what: str) -> Callable[[str], object]:
    def convert(text: str):
        try:
            return parse(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise argparse.ArgumentTypeError(f"invalid {what} {text!r}: {exc}") from None
    convert.__name__ = what
    return convert


def parse_angle(text: str) -> float:
    """``pi``, ``pi/3``, ``2pi/3``, ``-3*pi/4`` or a plain decimal."""
    m = _ANGLE.match(text)
    if m:
        coeff = m.group(1)
        k = int(coeff) if coeff not in ("", "+", "-") else (-1 if coeff == "-" else 1)
        return k * math.pi / int(m.group(2) or 1)
    value = float(text)
    if not math.isfinite(value):
        raise ValueError("angle must be finite")
    return value


rational = _typed(parse_rational, "rational")
halfint = _typed(parse_halfint, "half-integer")
angle = _typed(parse_angle, "angle")


def _natural(text: str) -> int:
    value = int(text)
    if value < 0:
        raise ValueError("must be nonnegative")
    return value


natural = _typed(_natural, "nonnegative integer")


# ---------------------------------------------------------------------------
# rendering

def decimal(value: float) -> str:
    return f"{value:.15g}"


def render_value(value) -> str:
    """Exact values as canonical text plus an approximation; floats to 15 digits."""
    if isinstance(value, float):
        return decimal(value)
    if isinstance(value, SqrtRational):
        return str(value) if not value else f"{value} ≈ {decimal(float(value))}"
    value = Fraction(value)
    if value.denominator == 1:
        return format_rational(value)
    return f"{format_rational(value)} ≈ {decimal(float(value))}"


# ---------------------------------------------------------------------------
# eval

def _threej_args(ns) -> ang.ThreeJArgs:
    return ang.ThreeJArgs(*ns.j, *ns.m)


_EVALUATORS: dict[str, Callable] = {
    "threej": lambda ns: ang.threej(_threej_args(ns)),
    "clebsch": lambda ns: ang.clebsch(ang.CGArgs(ns.j[0], ns.m[0], ns.j[1], ns.m[1], ns.j[2], ns.m[2])),
    "wigner-d": lambda ns: ang.wigner_d(ns.j, ns.m, ns.k, ns.theta),
    "character": lambda ns: ang.character(ns.j, ns.omega),
    "gen-character": lambda ns: ang.gen_character(ns.j, ns.lam, ns.omega),
    "jacobi": lambda ns: pf.jacobi(ns.n, ns.alpha, ns.beta, ns.x),
    "hahn": lambda ns: pf.hahn(ns.n, ns.x, ns.alpha, ns.beta, ns.N),
    "celine": lambda ns: pf.celine_f(ns.a, ns.b, ns.x, ns.n),
    "jain": lambda ns: pf.jain_J(ns.c, ns.k, ns.a, ns.b, ns.x, ns.n),
    "shah": lambda ns: pf.shah_F(ns.m, ns.lam, ns.mu, ns.a, ns.b, ns.x, ns.n),
    "khan": lambda ns: pf.khan_f(ns.k, ns.lam, ns.mu, ns.a, ns.b, ns.x, ns.n),
    "rice": lambda ns: pf.rice_H(ns.n, ns.alpha, ns.beta, ns.xi, ns.p, ns.v),
    "ahmad": lambda ns: pf.ahmad_A(ns.alpha, ns.beta, ns.a, ns.b, ns.x, ns.n),
}


def _add_eval_parsers(sub) -> None:
    def quantity(name, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(quantity=name)
        return p

    def degree(p):
        p.add_argument("-n", type=natural, required=True, help="degree")

    def lists(p):
        p.add_argument("--a", type=rational, nargs="*", default=[], help="extra numerator parameters")
        p.add_argument("--b", type=rational, nargs="*", default=[], help="extra denominator parameters")

    for name in ("threej", "clebsch"):
        p = quantity(name, f"exact {name} coefficient")
        p.add_argument("--j", type=halfint, nargs=3, required=True, metavar="J")
        p.add_argument("--m", type=halfint, nargs=3, required=True, metavar="M")

    p = quantity("wigner-d", "d^j_mk(theta)")
    for flag in ("--j", "--m", "--k"):
        p.add_argument(flag, type=halfint, required=True)
    p.add_argument("--theta", type=angle, required=True)

    p = quantity("character", "SO(3) character")
    p.add_argument("--j", type=halfint, required=True)
    p.add_argument("--omega", type=angle, required=True)

    p = quantity("gen-character", "generalized character of order lambda")
    p.add_argument("--j", type=halfint, required=True)
    p.add_argument("--lam", type=halfint, required=True)
    p.add_argument("--omega", type=angle, required=True)

    p = quantity("jacobi", "Jacobi polynomial P_n^(alpha,beta)(x)")
    degree(p)
    for flag in ("--alpha", "--beta", "--x"):
        p.add_argument(flag, type=rational, required=True)

    p = quantity("hahn", "Hahn polynomial Q_n(x; alpha, beta, N)")
    degree(p)
    p.add_argument("--x", type=rational, required=True)
    p.add_argument("--alpha", type=rational, required=True)
    p.add_argument("--beta", type=rational, required=True)
    p.add_argument("-N", type=natural, required=True)

    p = quantity("celine", "Sister Celine f_n[a; b; x]")
    degree(p)
    lists(p)
    p.add_argument("--x", type=rational, required=True)

    p = quantity("jain", "Jain J_n")
    degree(p)
    p.add_argument("--c", type=rational, required=True)
    p.add_argument("--k", type=natural, required=True)
    lists(p)
    p.add_argument("--x", type=rational, required=True)

    p = quantity("shah", "Shah F_n")
    degree(p)
    p.add_argument("--m", type=natural, required=True)
    p.add_argument("--lam", type=rational, required=True)
    p.add_argument("--mu", type=rational, required=True)
    lists(p)
    p.add_argument("--x", type=rational, required=True)

    p = quantity("khan", "Khan f_n")
    degree(p)
    p.add_argument("--k", type=natural, required=True)
    p.add_argument("--lam", type=rational, required=True)
    p.add_argument("--mu", type=rational, required=True)
    lists(p)
    p.add_argument("--x", type=rational, required=True)

    p = quantity("rice", "generalized Rice polynomial H_n")
    degree(p)
    for flag in ("--alpha", "--beta", "--xi", "--p", "--v"):
        p.add_argument(flag, type=rational, required=True)

    p = quantity("ahmad", "Ahmad A_n^(alpha,beta)")
    degree(p)
    p.add_argument("--alpha", type=rational, required=True)
    p.add_argument("--beta", type=rational, required=True)
    lists(p)
    p.add_argument("--x", type=rational, required=True)


def cmd_eval(ns) -> int:
    value = _EVALUATORS[ns.quantity](ns)
    print(render_value(value))
    return EXIT_OK


# ---------------------------------------------------------------------------
# table

def table_rows(quantity: str, jmax: HalfInt) -> list[dict]:
    """Rows in lexicographic order of twice-values.

    For ``clebsch`` the six columns hold ``a, b, c, alpha, beta, gamma``.
    """
    rows = []
    for args in harness.threej_configs(jmax.twice):
        if quantity == "clebsch":
            labels = ang.ThreeJArgs(args.j1, args.j2, args.j3, args.m1, args.m2, -args.m3)
            value = ang.clebsch(ang.CGArgs(args.j1, args.m1, args.j2, args.m2, args.j3, -args.m3))
        else:
            labels, value = args, ang.threej(args)
        row = dict(zip(TABLE_HEADER, labels.twice()))
        row["exact"] = str(value)
        row["decimal"] = decimal(float(value))
        rows.append(row)
    return rows


def render_table(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2, ensure_ascii=False) + "\n"
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=TABLE_HEADER, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def _write(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise _Unwritable(f"cannot write {path}: {exc.strerror or exc}") from None


class _Unwritable(Exception):
    pass


def cmd_table(ns) -> int:
    if ns.jmax.twice < 0:
        raise _UsageError("--jmax must be nonnegative")
    _write(ns.out, render_table(table_rows(ns.quantity, ns.jmax), ns.format))
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify

def cmd_verify(ns) -> int:
    if ns.suite == "all":
        ids = [s.id for s in harness.list_suites()]
    else:
        try:
            ids = [harness.get_suite(ns.suite).id]
        except harness.SuiteNotFoundError as exc:
            raise _UsageError(str(exc)) from None
    reports = [harness.run_suite(i, ns.scale, ns.seed) for i in ids]
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status} {r.suite} cases={r.cases_run} failures={len(r.failures)} time={r.wall_time_s:.2f}s")
    ok = all(r.passed for r in reports)
    if ns.report:
        payload = {
            "pass": ok,
            "scale": ns.scale,
            "seed": ns.seed,
            "suites": [r.to_dict() for r in reports],
        }
        _write(ns.report, json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------------------
# entry point

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="celine",
        description="Exact hypergeometric polynomials and angular-momentum coefficients.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one quantity")
    _add_eval_parsers(p_eval.add_subparsers(dest="quantity", required=True))
    p_eval.set_defaults(handler=cmd_eval)

    p_table = sub.add_parser("table", help="tabulate 3j or Clebsch-Gordan coefficients")
    p_table.add_argument("quantity", choices=("threej", "clebsch"))
    p_table.add_argument("--jmax", type=halfint, required=True)
    p_table.add_argument("--format", choices=("csv", "json"), default="csv")
    p_table.add_argument("--out", help="output file (default: standard output)")
    p_table.set_defaults(handler=cmd_table)

    p_verify = sub.add_parser("verify", help="run identity suites")
    p_verify.add_argument("--suite", default="all", help="suite id or 'all'")
    p_verify.add_argument("--scale", choices=harness.SCALES, default="default")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--report", help="write the JSON report here")
    p_verify.set_defaults(handler=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        return ns.handler(ns)
    except _UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CelineError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except _Unwritable as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_IO
