"""``idemring`` command line.

Exit codes: 0 success, 1 invariant violation or method disagreement,
2 usage error.
"""

from __future__ import annotations

import argparse
import sys

from .arith import U64_MAX, DomainError, factorize
from .bench import run_bench
from .engine import IdempotentSet, method_report
from .oracle import crt_idempotents, scan_ceiling, scan_idempotents
from .tables import (
    render_members,
    render_table_json,
    render_table_text,
    render_table_tsv,
)
from .verify import verify_range

LIST_METHODS = ("prop51", "prop52", "prop53", "scan", "crt")
TABLE_METHODS = ("auto", "prop52", "prop53")
FORMATS = ("text", "json", "tsv")

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _modulus(raw: str) -> int:
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"n must be an integer, got {raw!r}") from None
    if not 2 <= n <= U64_MAX:
        raise UsageError(f"n must satisfy 2 <= n <= 2^64-1, got {n}")
    return n


def cmd_list(args) -> tuple[int, str]:
    n = _modulus(args.n)
    fac = factorize(n)
    if args.method == "scan":
        members = IdempotentSet.of(n, scan_idempotents(n).members)
    elif args.method == "crt":
        members = IdempotentSet.of(n, crt_idempotents(fac).members)
    else:
        members = method_report(fac, args.method).idempotents()
    return EXIT_OK, render_members(fac, args.method, members, args.format)


def cmd_table(args) -> tuple[int, str]:
    n = _modulus(args.n)
    fac = factorize(n)
    method = "prop51" if args.method == "auto" else args.method
    report = method_report(fac, method)
    if fac.k < 2:
        print(f"n={n} is a prime power: no coprime splits", file=sys.stderr)
    render = {"text": render_table_text, "tsv": render_table_tsv, "json": render_table_json}
    return EXIT_OK, render[args.format](report)


def cmd_verify(args) -> tuple[int, str]:
    ceiling = scan_ceiling()
    if not 2 <= args.max <= ceiling:
        raise UsageError(f"--max must lie in [2, {ceiling}] (scan ceiling)")
    report = verify_range(args.max)
    text = report.summary() + "\n"
    if not report.ok:
        return EXIT_VIOLATION, text + f"first violation: {report.violations[0]}\n"
    return EXIT_OK, text


def cmd_bench(args) -> tuple[int, str]:
    if args.reps < 1:
        raise UsageError("--reps must be >= 1")
    if args.max < 2:
        raise UsageError("--max must be >= 2")
    report = run_bench(args.max, args.reps)
    return (EXIT_OK if report.ok else EXIT_VIOLATION), report.render()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="idemring", description="Idempotents of Z_n via coprime splits."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list", help="print every idempotent of Z_n")
    p.add_argument("n")
    p.add_argument("--method", choices=LIST_METHODS, default="prop51")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("table", help="print the split table behind a working method")
    p.add_argument("n")
    p.add_argument("--method", choices=TABLE_METHODS, default="auto")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="check every invariant for 2 <= n <= MAX")
    p.add_argument("--max", type=int, default=1000)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="compare Bezout, u-search and naive r-finding")
    p.add_argument("--max", type=int, default=10000)
    p.add_argument("--reps", type=int, default=3)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, out = args.func(args)
    except (UsageError, DomainError) as exc:
        print(f"idemring: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
