"""Command-line interface.

Subcommands: ``grundy``, ``outcome``, ``moves``, ``table two-pass``,
``ppos three-pass``, ``verify``. Exit codes: 0 success, 1 verification or
cross-check failure, 2 usage or parse error, 3 resource limit or I/O error.
The arena node budget honors the ``NIMPASS_NODE_LIMIT`` environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .arena import DEFAULT_NODE_LIMIT, Arena, ResourceLimitError
from .expressions import ExprSyntaxError, eval_expr, format_expr, format_game, parse_expr
from .nim_with_pass import (
    cross_check_three_pile,
    three_pile_ppos_direct,
    three_pile_ppos_ner,
    two_pile_table,
)
from .solver import grundy, outcome, winning_moves
from .verifier import GenConfig, UnknownCheckError, run_suite

NODE_LIMIT_ENV = "NIMPASS_NODE_LIMIT"

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _make_arena() -> Arena:
    raw = os.environ.get(NODE_LIMIT_ENV)
    if raw is None:
        return Arena()
    try:
        limit = int(raw)
        if limit < 1:
            raise ValueError
    except ValueError:
        raise SystemExit(
            f"error: {NODE_LIMIT_ENV} must be a positive integer, got {raw!r}"
        ) from None
    return Arena(node_limit=limit)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nimpass",
        description="Query, tabulate and verify impartial games with pass moves "
        "and split sums.",
    )
    parser.add_argument(
        "--json", action="store_true", help="emit machine-readable JSON"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("grundy", "Grundy value of a game expression"),
        ("outcome", "P or N status of a game expression"),
        ("moves", "winning moves of a game expression"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("expr", help="game expression, e.g. 'pass(nim(3,5))'")
        p.add_argument("--json", action="store_true", help="emit JSON")

    p = sub.add_parser("table", help="emit a Grundy-value table")
    p.add_argument("kind", choices=["two-pass"], help="table kind")
    p.add_argument("--max", type=int, required=True, help="largest pile size")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", help="output file (default: stdout)")

    p = sub.add_parser("ppos", help="emit P-positions")
    p.add_argument("kind", choices=["three-pass"], help="position family")
    p.add_argument("--max", type=int, required=True, help="largest pile size")
    p.add_argument(
        "--method",
        choices=["ner", "direct", "both"],
        default="both",
        help="table-derived, direct evaluation, or cross-checked",
    )
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", help="output file (default: stdout)")

    p = sub.add_parser("verify", help="run algebraic-law checks")
    p.add_argument("selection", help="check name or 'all'")
    p.add_argument(
        "--exhaustive-birthday",
        type=int,
        default=3,
        choices=range(4),
        metavar="B",
        help="form birthday for exhaustive pair/triple sweeps (0-3, default 3)",
    )
    p.add_argument("--samples", type=int, default=200, help="random cases per check")
    p.add_argument("--seed", type=int, default=42, help="random seed")
    p.add_argument("--report", help="write the JSON report array to this file")
    return parser


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _cmd_query(args) -> int:
    arena = _make_arena()
    ast = parse_expr(args.expr)
    game = eval_expr(arena, ast)
    value = grundy(arena, game)
    moves = [format_game(arena, m) for m in winning_moves(arena, game)]
    if args.json:
        print(
            json.dumps(
                {
                    "expr": format_expr(ast),
                    "grundy": value,
                    "outcome": str(outcome(arena, game)),
                    "winning_moves": moves,
                }
            )
        )
        return EXIT_OK
    if args.command == "grundy":
        print(value)
    elif args.command == "outcome":
        print(outcome(arena, game))
    else:
        for m in moves:
            print(m)
    return EXIT_OK


def _cmd_table(args) -> int:
    if args.max < 0:
        raise SystemExit("error: --max must be a natural number")
    table = two_pile_table(args.max)
    cells = sorted(table.entries.items())
    if args.format == "csv":
        lines = ["a,b,grundy"]
        lines += ["%d,%d,%d" % (a, b, v) for (a, b), v in cells]
        text = "\n".join(lines) + "\n"
    else:
        payload = {
            "max": table.max,
            "entries": [{"a": a, "b": b, "grundy": v} for (a, b), v in cells],
        }
        text = json.dumps(payload) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def _cmd_ppos(args) -> int:
    if args.max < 0:
        raise SystemExit("error: --max must be a natural number")
    status = EXIT_OK
    if args.method == "ner":
        triples = sorted(three_pile_ppos_ner(args.max))
    elif args.method == "direct":
        triples = sorted(three_pile_ppos_direct(args.max))
    else:
        report = cross_check_three_pile(args.max)
        if not report.passed:
            for failure in report.failures:
                print(
                    f"cross-check mismatch: {failure.inputs['position']}: "
                    f"expected {failure.expected}, got {failure.actual}",
                    file=sys.stderr,
                )
            status = EXIT_VERIFICATION_FAILED
        triples = sorted(three_pile_ppos_direct(args.max))
    if args.format == "csv":
        lines = ["a,b,c"]
        lines += ["%d,%d,%d" % t for t in triples]
        text = "\n".join(lines) + "\n"
    else:
        payload = {
            "max": args.max,
            "method": args.method,
            "triples": [list(t) for t in triples],
        }
        text = json.dumps(payload) + "\n"
    _emit(text, args.out)
    return status


def _cmd_verify(args) -> int:
    if args.samples < 0:
        raise SystemExit("error: --samples must be a natural number")
    cfg = GenConfig(samples=args.samples, seed=args.seed)
    try:
        reports = run_suite(
            args.selection,
            cfg,
            exhaustive_birthday=args.exhaustive_birthday,
            arena=_make_arena(),
        )
    except UnknownCheckError as exc:
        raise SystemExit(f"error: {exc}") from None
    for rep in reports:
        note = f", excluded={rep.excluded}" if rep.excluded else ""
        print(
            f"{rep.theorem} [{rep.mode}]: "
            f"{'pass' if rep.passed else 'FAIL'} "
            f"(cases={rep.cases}{note}, failures={len(rep.failures)}, "
            f"{rep.elapsed_ms} ms)",
            file=sys.stderr,
        )
    text = json.dumps([rep.to_dict() for rep in reports], indent=2) + "\n"
    _emit(text, args.report)
    return EXIT_OK if all(rep.passed for rep in reports) else EXIT_VERIFICATION_FAILED


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        if args.command in ("grundy", "outcome", "moves"):
            return _cmd_query(args)
        if args.command == "table":
            return _cmd_table(args)
        if args.command == "ppos":
            return _cmd_ppos(args)
        return _cmd_verify(args)
    except ExprSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        # Raised for flag-value errors detected after parsing.
        if exc.code is not None and not isinstance(exc.code, int):
            print(exc.code, file=sys.stderr)
            return EXIT_USAGE
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except (ResourceLimitError, RecursionError) as exc:
        print(f"error: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
