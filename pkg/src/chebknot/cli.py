"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 bad arguments, 3 domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import chebgen, verify
from .alexander import TorusParams, torus_alexander, torus_n2
from .errors import NonCoprime
from .render import (
    FORMATS,
    csv_cells,
    render_latex,
    render_text,
    to_json_obj,
)

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_range(text: str) -> range:
    """``"3"`` or ``"1..5"`` (inclusive) to a range."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            r = range(int(lo), int(hi) + 1)
        else:
            v = int(text)
            r = range(v, v + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO..HI, got {text!r}") from None
    if not r:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return r


def _csv_line(row: list) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerow(row)
    return buf.getvalue()


def _poly_rows(rows, fmt: str) -> str:
    """rows: iterable of (k, h, n, Polynomial)."""
    rows = list(rows)
    if fmt == "json":
        return json.dumps(
            [{"k": k, "h": h, "n": n, "poly": to_json_obj(p)} for k, h, n, p in rows], indent=2
        ) + "\n"
    if fmt == "csv":
        width = max(len(p.coeffs) for *_, p in rows)
        out = _csv_line(["k", "h", "n"] + [f"c{i}" for i in range(width)])
        for k, h, n, p in rows:
            out += _csv_line([k, h, n] + csv_cells(p))
        return out
    if fmt == "latex":
        return "".join(f"T^{{({k},{h})}}_{{{n}}}={render_latex(p)}\n" for k, h, n, p in rows)
    return "".join(f"T^({k},{h})_{n} = {render_text(p)}\n" for k, h, n, p in rows)


def cmd_gen(args) -> int:
    try:
        p = chebgen.ChebParams(args.k, args.h, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    poly = chebgen.cheb_recurrence(p)
    if args.format == "text":
        sys.stdout.write(render_text(poly) + "\n")
    elif args.format == "latex":
        sys.stdout.write(render_latex(poly) + "\n")
    elif args.format == "json":
        sys.stdout.write(json.dumps({"k": p.k, "h": p.h, "n": p.n, "poly": to_json_obj(poly)}) + "\n")
    else:
        sys.stdout.write(_poly_rows([(p.k, p.h, p.n, poly)], "csv"))
    return EXIT_OK


def cmd_table(args) -> int:
    if args.n_max < 0 or args.k.start < 1 or args.h.start < 1:
        raise UsageError("table needs k >= 1, h >= 1, n-max >= 0")
    rows = [
        (k, h, n, poly)
        for k in args.k
        for h in args.h
        for n, poly in enumerate(chebgen.cheb_sequence(k, h, args.n_max))
    ]
    sys.stdout.write(_poly_rows(rows, args.format))
    return EXIT_OK


def cmd_alexander(args) -> int:
    try:
        if args.l is None:
            if args.n < 1:
                raise ValueError(f"n must be >= 1 (got {args.n})")
            lp = torus_n2(args.n)
            l = 2
        else:
            lp = torus_alexander(TorusParams(args.n, args.l))
            l = args.l
    except NonCoprime as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "text":
        sys.stdout.write(render_text(lp) + "\n")
    elif args.format == "latex":
        sys.stdout.write(render_latex(lp) + "\n")
    elif args.format == "json":
        sys.stdout.write(json.dumps({"n": args.n, "l": l, "delta": to_json_obj(lp)}) + "\n")
    else:
        cells = [f"{c.numerator}/{c.denominator}" for c in lp.coeffs]
        sys.stdout.write(_csv_line(["n", "l", "min_exp"] + [f"c{i}" for i in range(len(cells))]))
        sys.stdout.write(_csv_line([args.n, l, lp.min_exp] + cells))
    return EXIT_OK


def cmd_verify(args) -> int:
    seeds = []
    if args.seed_check:
        for k in range(1, args.k_max + 1):
            for h in range(1, args.h_max + 1):
                s = chebgen.seed_pair(k, h)
                seeds.append({"k": k, "h": h, "A": str(s.A), "B": str(s.B)})
    try:
        reports = verify.run_suite(args.suite, args.k_max, args.h_max, args.n_max, args.samples)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    passed = all(r.passed for r in reports)
    if args.format == "json":
        doc = {"passed": passed, "reports": [r.to_dict() for r in reports]}
        if args.seed_check:
            doc["seeds"] = seeds
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        for s in seeds:
            print(f"seed k={s['k']} h={s['h']}: A={s['A']} B={s['B']}")
        for r in reports:
            print(r.summary())
            for f in r.failures:
                print(f"  {f['params']}: lhs = {f['lhs']}  rhs = {f['rhs']}")
        print("PASS" if passed else "FAIL")
    return EXIT_OK if passed else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chebknot",
        description="Generalized equidistant Chebyshev polynomials and torus-knot Alexander invariants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("gen", help="print one polynomial T^(k,h)_n")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--h", type=int, default=1)
    p.add_argument("--n", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("table", help="print T^(k,h)_0..n_max over ranges of k and h")
    p.add_argument("--k", type=parse_range, default=range(1, 2), help="N or LO..HI")
    p.add_argument("--h", type=parse_range, default=range(1, 2), help="N or LO..HI")
    p.add_argument("--n-max", type=int, default=5)
    add_format(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("alexander", help="Alexander polynomial of T(n, l)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, default=None, help="omit for T(n, 2) with knot/link dispatch")
    add_format(p)
    p.set_defaults(func=cmd_alexander)

    p = sub.add_parser("verify", help="run identity checks")
    p.add_argument("--suite", choices=verify.SUITES + ("all",), default="all")
    p.add_argument("--k-max", type=int, default=10)
    p.add_argument("--h-max", type=int, default=10)
    p.add_argument("--n-max", type=int, default=50)
    p.add_argument("--samples", type=int, default=1000, help="theta samples for the trig suite")
    p.add_argument("--seed-check", action="store_true", help="print the (A, B) seeds first")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
