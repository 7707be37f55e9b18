"""Command-line interface.

Subcommands: decompose, two-term, oracle, sweep, stats.  Exit codes:
0 success, 1 proven non-existence (decompose), 2 usage error, 3 I/O or
overflow error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .core_arith import CheckedOverflowError, is_prime
from .oracle import OracleQuery, enumerate_three_term
from .sweep import (
    SweepConfig,
    Status,
    emit_report,
    load_report,
    method_histogram,
    record_to_obj,
    solve,
    sweep_range,
    _record_to_csv_row,
)
from .two_term import solve_two_term


def _cmd_decompose(args: argparse.Namespace) -> int:
    rec = solve(args.n, args.k_bound)
    if args.json:
        print(json.dumps(record_to_obj(rec)))
        if rec.status is Status.SOLVED:
            return 0
        return 1 if rec.status is Status.NO_DISTINCT_SOLUTION else 3
    if rec.status is Status.SOLVED:
        print(f"4/{rec.n} = 1/{rec.x1} + 1/{rec.x2} + 1/{rec.x3}")
        print(f"method: {rec.method.value}   hard: {'true' if rec.hard else 'false'}")
        return 0
    if rec.status is Status.NO_DISTINCT_SOLUTION:
        print(
            f"4/{args.n} has no decomposition into three distinct unit fractions:"
            " the finite window on the smallest part was scanned exhaustively,"
            " so this is a proof of non-existence."
        )
        repeats = enumerate_three_term(
            OracleQuery(4, args.n, distinct_only=False, limit=1)
        )
        if repeats:
            t = repeats[0]
            print(f"with repeats allowed: 4/{args.n} = 1/{t.x1} + 1/{t.x2} + 1/{t.x3}")
        return 1
    print(f"error: {rec.detail}", file=sys.stderr)
    return 3


def _cmd_two_term(args: argparse.Namespace) -> int:
    sol = solve_two_term(args.q, args.p)
    if sol is not None:
        print(f"{args.q}/{args.p} = 1/{sol.x1} + 1/{sol.x2}")
        return 0
    if args.p > 1 and is_prime(args.p):
        print(
            f"no distinct two-term decomposition of {args.q}/{args.p} exists:"
            f" {args.p} is prime and {args.p} + 1 is not divisible by {args.q}"
        )
    else:
        print(
            f"the closed-form constructor does not apply to {args.q}/{args.p};"
            " for composite denominators that does not rule out a solution"
        )
    return 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    distinct = not args.allow_repeats
    if args.count:
        found = enumerate_three_term(OracleQuery(args.a, args.n, distinct))
        print(len(found))
        return 0
    limit = args.limit if args.all else 1
    found = enumerate_three_term(OracleQuery(args.a, args.n, distinct, limit))
    if not found:
        kind = "distinct " if distinct else ""
        print(
            f"no {kind}three-term decomposition of {args.a}/{args.n} exists"
            " (window scan exhausted)"
        )
        return 0
    for t in found:
        print(f"{args.a}/{args.n} = 1/{t.x1} + 1/{t.x2} + 1/{t.x3}")
    return 0


def _probe_writable(path: str) -> None:
    try:
        with open(path, "a", encoding="utf-8"):
            pass
    except OSError as exc:
        raise OSError(f"cannot write report to {path}: {exc}") from exc


def _cmd_sweep(args: argparse.Namespace) -> int:
    config = SweepConfig(
        start=args.start,
        end=args.end,
        workers=args.workers,
        k_bound=args.k_bound,
        checkpoint_path=args.checkpoint,
        report_format=args.format,
    )
    if args.report:
        _probe_writable(args.report)
    records = sweep_range(config)
    if args.report:
        emit_report(records, args.format, args.report)
        solved = sum(r.status is Status.SOLVED for r in records)
        missing = sum(r.status is Status.NO_DISTINCT_SOLUTION for r in records)
        errors = sum(r.status is Status.ERROR for r in records)
        hard = sum(r.hard for r in records)
        print(
            f"{len(records)} records -> {args.report}"
            f" (solved {solved}, no-distinct {missing}, errors {errors}, hard {hard})"
        )
    elif args.format == "json":
        print(json.dumps([record_to_obj(r) for r in records], indent=1))
    else:
        for rec in records:
            print(",".join(_record_to_csv_row(rec)))
    return 0


def _cmd_stats(args: argparse.Namespace) -> int:
    records = load_report(args.report_path)
    solved = sum(r.status is Status.SOLVED for r in records)
    missing = sum(r.status is Status.NO_DISTINCT_SOLUTION for r in records)
    errors = sum(r.status is Status.ERROR for r in records)
    hard = sum(r.hard for r in records)
    print(
        f"records: {len(records)}  solved: {solved}  no-distinct: {missing}"
        f"  errors: {errors}  hard: {hard}"
    )
    print("method histogram:")
    hist = method_histogram(records)
    for tag, count in sorted(hist.items(), key=lambda kv: (-kv[1], kv[0])):
        print(f"  {tag:<20} {count}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fourovern",
        description="Decompose 4/n into three distinct unit fractions and sweep ranges of n.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="solve 4/n and print the construction used")
    p.add_argument("n", type=int)
    p.add_argument("--k-bound", type=int, default=999, help="witness search bound on odd k")
    p.add_argument("--json", action="store_true", help="print the record as JSON")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("two-term", help="closed-form q/p = 1/x1 + 1/x2 with x1 != x2")
    p.add_argument("q", type=int)
    p.add_argument("p", type=int)
    p.set_defaults(func=_cmd_two_term)

    p = sub.add_parser("oracle", help="exhaustive enumeration of a/n = 1/x + 1/y + 1/z")
    p.add_argument("a", type=int)
    p.add_argument("n", type=int)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--first", action="store_true", help="print the first triple (default)")
    mode.add_argument("--all", action="store_true", help="print every triple")
    mode.add_argument("--count", action="store_true", help="print the number of triples")
    p.add_argument("--allow-repeats", action="store_true", help="allow equal parts")
    p.add_argument("--limit", type=int, default=None, help="cap --all output")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("sweep", help="solve every n in [start, end] and report")
    p.add_argument("start", type=int)
    p.add_argument("end", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--checkpoint", default=None, help="JSON-lines checkpoint path (resumable)")
    p.add_argument("--report", default=None, help="report destination (default: stdout)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--k-bound", type=int, default=999)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("stats", help="method histogram and hard-class count of a report")
    p.add_argument("report_path", type=Path)
    p.set_defaults(func=_cmd_stats)

    return parser


def cli_main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the message
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except CheckedOverflowError as exc:
        print(f"arithmetic overflow: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    raise SystemExit(cli_main())


if __name__ == "__main__":
    main()
