"""Command-line front end.

Exit codes: 0 success, 1 usage or input error, 2 verification failure,
unsatisfiable puzzle or failed check.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence, TextIO

from . import oracle, selfcheck as sc, skyscraper as sky, verify as vf
from .combinatorics import stirling_row
from .puzzle import PuzzleFormatError, format_solutions, parse_puzzle, parse_solutions, verify_solution
from .solver import solve
from .tableio import FORMATS, format_table

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_FAILED = 2

TABLE_WARN_N = 200


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="skyscraper-numbers", description="Skyscraper numbers and puzzles.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser, required=True)

    s = sub.add_parser("table", help="print the f_n(a, b) table")
    s.add_argument("--n", type=_positive, required=True)
    s.add_argument("--format", choices=FORMATS, default="text")

    s = sub.add_parser("stirling", help="print c(n, 0..n)")
    s.add_argument("--n", type=int, required=True)

    s = sub.add_parser("count", help="print f_n(a, b)")
    s.add_argument("--n", type=_positive, required=True)
    s.add_argument("--left", type=int, required=True)
    s.add_argument("--right", type=int, required=True)

    s = sub.add_parser("maxpair", help="maximizing clue pairs for one n")
    s.add_argument("--n", type=_positive, required=True)

    s = sub.add_parser("sequence", help="maximum of f_n for n = 1..max-n")
    s.add_argument("--max-n", type=_positive, required=True)

    s = sub.add_parser("enumerate-row", help="list rows matching end clues")
    s.add_argument("--n", type=_positive, required=True)
    s.add_argument("--left", type=int)
    s.add_argument("--right", type=int)
    s.add_argument("--limit", type=int)

    s = sub.add_parser("verify", help="run the invariant suites")
    s.add_argument("--n-max", type=_positive, default=8)
    s.add_argument("--workers", type=_positive, default=1, help="processes for the brute-force sweep")

    sub.add_parser("selfcheck", help="compare against the published values")

    s = sub.add_parser("solve", help="solve a puzzle file")
    s.add_argument("file")
    s.add_argument("--count-all", action="store_true", help="enumerate and count every solution")
    s.add_argument("--max-solutions", type=_positive, default=2)

    s = sub.add_parser("check", help="check a solution file against a puzzle file")
    s.add_argument("file")
    s.add_argument("solution_file")
    return p


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _cmd_table(args, out, err):
    if args.n > TABLE_WARN_N:
        print(f"warning: n={args.n} builds an {args.n}x{args.n} table of large integers", file=err)
    out.write(format_table(sky.skyscraper_table(args.n), args.format))
    return EXIT_OK


def _cmd_stirling(args, out, err):
    if args.n < 0:
        raise ValueError("--n must be >= 0")
    print(" ".join(map(str, stirling_row(args.n))), file=out)
    return EXIT_OK


def _cmd_count(args, out, err):
    print(sky.skyscraper_number_closed(args.n, args.left, args.right), file=out)
    return EXIT_OK


def _fmt_pair(pair):
    return f"({pair[0]}, {pair[1]})"


def _cmd_maxpair(args, out, err):
    rep = sky.max_pairs(args.n)
    print(f"n: {rep.n}", file=out)
    print(f"max_value: {rep.max_value}", file=out)
    print("pairs: " + ", ".join(_fmt_pair(p) for p in rep.pairs), file=out)
    print(f"canonical: {_fmt_pair(rep.canonical_pair)}", file=out)
    return EXIT_OK


def _cmd_sequence(args, out, err):
    for term in sky.sequence(args.max_n):
        print(f"{term.n}\t{term.max_value}\t{_fmt_pair(term.canonical_pair)}", file=out)
    return EXIT_OK


def _cmd_enumerate(args, out, err):
    rows = oracle.enumerate_rows(args.n, args.left, args.right, args.limit)
    for row in rows:
        print(" ".join(map(str, row)), file=out)
    return EXIT_OK


def _cmd_verify(args, out, err):
    results = vf.run_all(args.n_max, workers=args.workers)
    for r in results:
        print(r.line(), file=out)
    failed = sum(not r.ok for r in results)
    print(f"{len(results) - failed}/{len(results)} suites passed", file=out)
    return EXIT_OK if not failed else EXIT_FAILED


def _cmd_selfcheck(args, out, err):
    items = sc.selfcheck()
    for it in items:
        print(it.line(), file=out)
    counts = sc.summary(items)
    print(", ".join(f"{k}: {v}" for k, v in counts.items()), file=out)
    return EXIT_OK if counts[sc.FAIL] == 0 else EXIT_FAILED


def _cmd_solve(args, out, err):
    puzzle = parse_puzzle(_read(args.file))
    if args.count_all:
        result = solve(puzzle, max_solutions=None)
    else:
        result = solve(puzzle, max_solutions=args.max_solutions)
    count = "?" if result.count is None else result.count
    print(f"# status: {result.status}, count: {count}, nodes: {result.nodes_expanded}", file=out)
    out.write(format_solutions(result.solutions))
    return EXIT_FAILED if result.status == "unsatisfiable" else EXIT_OK


def _cmd_check(args, out, err):
    puzzle = parse_puzzle(_read(args.file))
    grids = parse_solutions(_read(args.solution_file))
    failed = 0
    for i, g in enumerate(grids, start=1):
        report = verify_solution(puzzle, g)
        label = f"solution {i}" if len(grids) > 1 else "solution"
        if report.ok:
            print(f"{label}: OK", file=out)
        else:
            failed += 1
            print(f"{label}: FAIL", file=out)
            for v in report.violations:
                print(f"  {v}", file=out)
    return EXIT_OK if not failed else EXIT_FAILED


_COMMANDS = {
    "table": _cmd_table,
    "stirling": _cmd_stirling,
    "count": _cmd_count,
    "maxpair": _cmd_maxpair,
    "sequence": _cmd_sequence,
    "enumerate-row": _cmd_enumerate,
    "verify": _cmd_verify,
    "selfcheck": _cmd_selfcheck,
    "solve": _cmd_solve,
    "check": _cmd_check,
}


def run(argv: Optional[Sequence[str]] = None, out: TextIO = None, err: TextIO = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=err)
        return EXIT_INPUT
    try:
        return _COMMANDS[args.command](args, out, err)
    except (OSError, PuzzleFormatError, ValueError, oracle.ResourceLimitError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
