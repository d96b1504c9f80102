"""Skyscraper puzzle model, file formats and solution checking.

Text format (UTF-8; lines starting with ``#`` and blank lines are ignored)::

    n
    top clues     (n integers, column order, 0 = absent)
    bottom clues  (n integers, column order)
    left clues    (n integers, row order)
    right clues   (n integers, row order)
    [n rows of n integers: given cells, 0 = empty]

The same data may be given as a JSON object with keys ``n``, ``top``,
``bottom``, ``left``, ``right`` and optionally ``grid``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .oracle import visibility

__all__ = [
    "Clues",
    "Grid",
    "Puzzle",
    "PuzzleFormatError",
    "PuzzleRangeError",
    "VerificationReport",
    "clues_of_grid",
    "format_grid",
    "format_solutions",
    "parse_grid",
    "parse_puzzle",
    "parse_solutions",
    "puzzle_from_grid",
    "puzzle_to_dict",
    "puzzle_to_text",
    "verify_solution",
]

Line = tuple[Optional[int], ...]

SIDES = ("top", "bottom", "left", "right")


class PuzzleFormatError(ValueError):
    """Malformed puzzle or solution text; carries a 1-based position."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class PuzzleRangeError(PuzzleFormatError):
    """A clue or given value lies outside 0..n."""


def _as_line(values: Sequence[Optional[int]]) -> Line:
    return tuple(None if not v else int(v) for v in values)


@dataclass(frozen=True)
class Clues:
    """Visibility clues; ``None`` marks an absent clue.

    ``top``/``bottom`` run over columns left to right, ``left``/``right`` over
    rows top to bottom.
    """

    top: Line
    bottom: Line
    left: Line
    right: Line

    @classmethod
    def empty(cls, n: int) -> "Clues":
        blank = (None,) * n
        return cls(blank, blank, blank, blank)

    @classmethod
    def from_lists(cls, top, bottom, left, right) -> "Clues":
        return cls(_as_line(top), _as_line(bottom), _as_line(left), _as_line(right))

    def row_pair(self, r: int) -> tuple[Optional[int], Optional[int]]:
        return self.left[r], self.right[r]

    def column_pair(self, c: int) -> tuple[Optional[int], Optional[int]]:
        return self.top[c], self.bottom[c]

    def count(self) -> int:
        return sum(v is not None for side in SIDES for v in getattr(self, side))


@dataclass(frozen=True)
class Puzzle:
    n: int
    clues: Clues
    givens: tuple[Line, ...] = ()

    def __post_init__(self):
        n = self.n
        if n < 1:
            raise PuzzleRangeError(f"grid size must be >= 1, got {n}")
        for side in SIDES:
            values = getattr(self.clues, side)
            if len(values) != n:
                raise PuzzleFormatError(f"{side} clues: expected {n} values, got {len(values)}")
            for i, v in enumerate(values):
                if v is not None and not 1 <= v <= n:
                    raise PuzzleRangeError(f"{side} clue {i + 1} is {v}, outside 0..{n}")
        if not self.givens:
            object.__setattr__(self, "givens", ((None,) * n,) * n)
            return
        if len(self.givens) != n or any(len(row) != n for row in self.givens):
            raise PuzzleFormatError(f"given cells must form a {n}x{n} grid")
        for r, row in enumerate(self.givens):
            for c, v in enumerate(row):
                if v is not None and not 1 <= v <= n:
                    raise PuzzleRangeError(f"given at row {r + 1}, column {c + 1} is {v}, outside 0..{n}")
        for idx in range(n):
            for label, line in (
                ("row", self.givens[idx]),
                ("column", [self.givens[r][idx] for r in range(n)]),
            ):
                present = [v for v in line if v is not None]
                if len(present) != len(set(present)):
                    raise PuzzleFormatError(f"duplicate given in {label} {idx + 1}")

    def has_givens(self) -> bool:
        return any(v is not None for row in self.givens for v in row)


@dataclass(frozen=True)
class Grid:
    """An n-by-n filling. Latin-ness is checked by :meth:`is_latin`, not here."""

    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        cells = tuple(tuple(int(v) for v in row) for row in self.cells)
        if any(len(row) != len(cells) for row in cells):
            raise ValueError("grid must be square")
        object.__setattr__(self, "cells", cells)

    @property
    def n(self) -> int:
        return len(self.cells)

    def row(self, r: int) -> tuple[int, ...]:
        return self.cells[r]

    def column(self, c: int) -> tuple[int, ...]:
        return tuple(row[c] for row in self.cells)

    def flat(self) -> tuple[int, ...]:
        return tuple(v for row in self.cells for v in row)

    def is_latin(self) -> bool:
        target = set(range(1, self.n + 1))
        return all(
            set(self.row(i)) == target and set(self.column(i)) == target
            for i in range(self.n)
        )

    def __lt__(self, other: "Grid") -> bool:
        return self.flat() < other.flat()


def clues_of_grid(g: Grid) -> Clues:
    """Full clue set seen around a filled grid."""
    rows = [visibility(g.row(r)) for r in range(g.n)]
    cols = [visibility(g.column(c)) for c in range(g.n)]
    return Clues(
        top=tuple(v.left for v in cols),
        bottom=tuple(v.right for v in cols),
        left=tuple(v.left for v in rows),
        right=tuple(v.right for v in rows),
    )


def puzzle_from_grid(g: Grid) -> Puzzle:
    return Puzzle(g.n, clues_of_grid(g))


@dataclass
class VerificationReport:
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "OK"
        return "\n".join(self.violations)


_SIDE_LINE = {"top": "column", "bottom": "column", "left": "row", "right": "row"}


def verify_solution(p: Puzzle, g: Grid) -> VerificationReport:
    """List every violated constraint of ``g`` against ``p``."""
    report = VerificationReport()
    if g.n != p.n:
        report.violations.append(f"grid is {g.n}x{g.n}, puzzle is {p.n}x{p.n}")
        return report
    n = p.n
    target = set(range(1, n + 1))
    for i in range(n):
        if set(g.row(i)) != target:
            report.violations.append(f"row {i + 1} is not a permutation of 1..{n}")
    for i in range(n):
        if set(g.column(i)) != target:
            report.violations.append(f"column {i + 1} is not a permutation of 1..{n}")
    for r in range(n):
        for c in range(n):
            want = p.givens[r][c]
            if want is not None and g.cells[r][c] != want:
                report.violations.append(
                    f"given at row {r + 1}, column {c + 1}: has {g.cells[r][c]}, needs {want}"
                )
    seen = clues_of_grid(g)
    for side in SIDES:
        for i, (need, got) in enumerate(zip(getattr(p.clues, side), getattr(seen, side))):
            if need is not None and need != got:
                report.violations.append(
                    f"{side} clue, {_SIDE_LINE[side]} {i + 1}: sees {got}, needs {need}"
                )
    return report


# ---------------------------------------------------------------- text formats


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        out.append((lineno, raw))
    return out


def _ints(lineno: int, raw: str, expected: int, what: str) -> list[int]:
    values = []
    pos = 0
    for token in raw.split():
        col = raw.index(token, pos) + 1
        pos = col - 1 + len(token)
        try:
            values.append(int(token))
        except ValueError:
            raise PuzzleFormatError(f"{what}: {token!r} is not an integer", lineno, col) from None
    if len(values) != expected:
        raise PuzzleFormatError(f"{what}: expected {expected} integers, got {len(values)}", lineno, 1)
    return values


def _check_range(lineno: int, raw: str, values: list[int], n: int, what: str) -> None:
    tokens = raw.split()
    pos = 0
    for token, v in zip(tokens, values):
        col = raw.index(token, pos) + 1
        pos = col - 1 + len(token)
        if not 0 <= v <= n:
            raise PuzzleRangeError(f"{what}: value {v} outside 0..{n}", lineno, col)


def _parse_json(text: str) -> Puzzle:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PuzzleFormatError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None
    if not isinstance(obj, dict):
        raise PuzzleFormatError("JSON puzzle must be an object")
    missing = [k for k in ("n", *SIDES) if k not in obj]
    if missing:
        raise PuzzleFormatError(f"JSON puzzle missing keys: {', '.join(missing)}")
    n = obj["n"]
    if not isinstance(n, int) or n < 1:
        raise PuzzleRangeError(f"n must be a positive integer, got {n!r}")

    def line(key, values):
        if not isinstance(values, list) or len(values) != n:
            raise PuzzleFormatError(f"{key}: expected a list of {n} integers")
        for v in values:
            if not isinstance(v, int):
                raise PuzzleFormatError(f"{key}: {v!r} is not an integer")
            if not 0 <= v <= n:
                raise PuzzleRangeError(f"{key}: value {v} outside 0..{n}")
        return values

    clues = Clues.from_lists(*(line(k, obj[k]) for k in SIDES))
    givens = ()
    if obj.get("grid") is not None:
        grid = obj["grid"]
        if not isinstance(grid, list) or len(grid) != n:
            raise PuzzleFormatError(f"grid: expected {n} rows")
        givens = tuple(_as_line(line(f"grid row {r + 1}", row)) for r, row in enumerate(grid))
    return Puzzle(n, clues, givens)


def parse_puzzle(text: str) -> Puzzle:
    """Read a puzzle in the line format or its JSON equivalent."""
    if text.lstrip().startswith("{"):
        return _parse_json(text)
    lines = _content_lines(text)
    if not lines:
        raise PuzzleFormatError("empty puzzle")
    lineno, raw = lines[0]
    (n,) = _ints(lineno, raw, 1, "grid size")
    if n < 1:
        raise PuzzleRangeError(f"grid size must be >= 1, got {n}", lineno, 1)
    if len(lines) < 5:
        last = lines[-1][0]
        raise PuzzleFormatError(f"expected 4 clue lines after the size, got {len(lines) - 1}", last)
    sides = []
    for side, (lineno, raw) in zip(SIDES, lines[1:5]):
        values = _ints(lineno, raw, n, f"{side} clues")
        _check_range(lineno, raw, values, n, f"{side} clues")
        sides.append(values)
    rest = lines[5:]
    givens: tuple[Line, ...] = ()
    if rest:
        if len(rest) != n:
            raise PuzzleFormatError(
                f"given grid must have {n} rows, got {len(rest)}", rest[0][0]
            )
        rows = []
        for r, (lineno, raw) in enumerate(rest):
            values = _ints(lineno, raw, n, f"grid row {r + 1}")
            _check_range(lineno, raw, values, n, f"grid row {r + 1}")
            rows.append(_as_line(values))
        givens = tuple(rows)
    try:
        return Puzzle(n, Clues.from_lists(*sides), givens)
    except PuzzleFormatError as exc:
        if exc.line is None and rest:
            raise PuzzleFormatError(str(exc), rest[0][0]) from None
        raise


def _zeros(values: Line) -> str:
    return " ".join(str(v or 0) for v in values)


def puzzle_to_text(p: Puzzle) -> str:
    parts = [str(p.n)] + [_zeros(getattr(p.clues, side)) for side in SIDES]
    if p.has_givens():
        parts += [_zeros(row) for row in p.givens]
    return "\n".join(parts) + "\n"


def puzzle_to_dict(p: Puzzle) -> dict:
    obj = {"n": p.n}
    for side in SIDES:
        obj[side] = [v or 0 for v in getattr(p.clues, side)]
    if p.has_givens():
        obj["grid"] = [[v or 0 for v in row] for row in p.givens]
    return obj


def format_grid(g: Grid) -> str:
    return "\n".join(" ".join(str(v) for v in row) for row in g.cells)


def format_solutions(grids: Sequence[Grid]) -> str:
    return "\n\n".join(format_grid(g) for g in grids) + ("\n" if grids else "")


def parse_solutions(text: str) -> list[Grid]:
    """Grids separated by blank lines; ``#`` comment lines are skipped."""
    blocks: list[list[tuple[int, str]]] = [[]]
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped.startswith("#"):
            continue
        if not stripped:
            if blocks[-1]:
                blocks.append([])
            continue
        blocks[-1].append((lineno, raw))
    grids = []
    for block in blocks:
        if not block:
            continue
        n = len(block)
        rows = [_ints(lineno, raw, n, f"solution row {i + 1}") for i, (lineno, raw) in enumerate(block)]
        grids.append(Grid(tuple(tuple(r) for r in rows)))
    if not grids:
        raise PuzzleFormatError("no grid found")
    return grids


def parse_grid(text: str) -> Grid:
    grids = parse_solutions(text)
    if len(grids) != 1:
        raise PuzzleFormatError(f"expected one grid, found {len(grids)}")
    return grids[0]
