import json

import pytest

from skyscraper_numbers.puzzle import (
    Clues,
    Grid,
    Puzzle,
    PuzzleFormatError,
    PuzzleRangeError,
    clues_of_grid,
    format_solutions,
    parse_grid,
    parse_puzzle,
    parse_solutions,
    puzzle_to_dict,
    puzzle_to_text,
    verify_solution,
)

from naive import all_clues, latin_squares


def test_parse_trivial():
    p = parse_puzzle("1\n1\n1\n1\n1\n")
    assert p.n == 1
    assert p.clues == Clues((1,), (1,), (1,), (1,))
    assert not p.has_givens()


def test_parse_field_mapping():
    p = parse_puzzle("2\n2 1\n1 2\n2 1\n1 2\n")
    assert p.clues.top == (2, 1)
    assert p.clues.bottom == (1, 2)
    assert p.clues.left == (2, 1)
    assert p.clues.right == (1, 2)


def test_parse_zero_means_absent_and_comments():
    text = "# a puzzle\n\n3\n0 0 0\n# bottom\n1 0 0\n0 2 0\n0 0 0\n"
    p = parse_puzzle(text)
    assert p.clues.top == (None, None, None)
    assert p.clues.bottom == (1, None, None)
    assert p.clues.left == (None, 2, None)


def test_parse_givens():
    p = parse_puzzle("3\n0 0 0\n0 0 0\n0 0 0\n0 0 0\n1 0 0\n0 0 0\n0 0 3\n")
    assert p.givens == ((1, None, None), (None, None, None), (None, None, 3))


def test_range_error_reports_position():
    with pytest.raises(PuzzleRangeError) as info:
        parse_puzzle("3\n0 0 0\n0 4 0\n0 0 0\n0 0 0\n")
    assert info.value.line == 3
    assert info.value.column == 3


def test_negative_value_is_range_error():
    with pytest.raises(PuzzleRangeError):
        parse_puzzle("2\n0 0\n0 0\n-1 0\n0 0\n")


@pytest.mark.parametrize(
    "text, line",
    [
        ("", None),
        ("x\n", 1),
        ("2\n1 2\n", 2),
        ("2\n1 2 1\n0 0\n0 0\n0 0\n", 2),
        ("2\n1 a\n0 0\n0 0\n0 0\n", 2),
        ("2\n0 0\n0 0\n0 0\n0 0\n1 2\n", 6),
    ],
)
def test_malformed(text, line):
    with pytest.raises(PuzzleFormatError) as info:
        parse_puzzle(text)
    assert info.value.line == line


def test_malformed_column():
    with pytest.raises(PuzzleFormatError) as info:
        parse_puzzle("2\n1 abc\n0 0\n0 0\n0 0\n")
    assert (info.value.line, info.value.column) == (2, 3)
    assert "line 2, column 3" in str(info.value)


def test_duplicate_given_rejected():
    with pytest.raises(PuzzleFormatError):
        parse_puzzle("3\n0 0 0\n0 0 0\n0 0 0\n0 0 0\n1 0 1\n0 0 0\n0 0 0\n")


def test_json_format_round_trip():
    p = parse_puzzle("3\n0 2 0\n0 0 1\n3 0 0\n1 0 0\n0 0 0\n0 1 0\n0 0 0\n")
    obj = puzzle_to_dict(p)
    assert obj["grid"][1] == [0, 1, 0]
    assert parse_puzzle(json.dumps(obj)) == p
    assert parse_puzzle(puzzle_to_text(p)) == p


def test_json_without_grid():
    p = parse_puzzle('{"n": 2, "top": [2, 1], "bottom": [0, 0], "left": [2, 0], "right": [0, 0]}')
    assert p.clues.top == (2, 1) and p.clues.left == (2, None)


@pytest.mark.parametrize(
    "text, exc",
    [
        ('{"n": 2, "top": [3, 1], "bottom": [0, 0], "left": [0, 0], "right": [0, 0]}', PuzzleRangeError),
        ('{"n": 2, "top": [1], "bottom": [0, 0], "left": [0, 0], "right": [0, 0]}', PuzzleFormatError),
        ('{"n": 2, "top": [1, 0]}', PuzzleFormatError),
        ('{"n": 2,', PuzzleFormatError),
    ],
)
def test_json_errors(text, exc):
    with pytest.raises(exc):
        parse_puzzle(text)


@pytest.mark.parametrize(
    "cells, top, bottom, left, right",
    [
        ([[1, 2], [2, 1]], (2, 1), (1, 2), (2, 1), (1, 2)),
        ([[1, 2, 3], [2, 3, 1], [3, 1, 2]], (3, 2, 1), (1, 2, 2), (3, 2, 1), (1, 2, 2)),
        ([[1]], (1,), (1,), (1,), (1,)),
    ],
)
def test_clues_of_grid(cells, top, bottom, left, right):
    assert clues_of_grid(Grid(cells)) == Clues(top, bottom, left, right)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_clues_of_grid_matches_naive(n):
    for sq in latin_squares(n):
        c = clues_of_grid(Grid(sq))
        assert (c.top, c.bottom, c.left, c.right) == all_clues(sq)


def _corner_puzzle():
    return Puzzle(2, Clues.from_lists([2, 1], [0, 0], [2, 1], [0, 0]))


def test_verify_pass():
    assert verify_solution(Puzzle(1, Clues.from_lists([1], [1], [1], [1])), Grid([[1]])).ok
    assert verify_solution(_corner_puzzle(), Grid([[1, 2], [2, 1]])).ok


def test_verify_reports_each_clue():
    report = verify_solution(_corner_puzzle(), Grid([[2, 1], [1, 2]]))
    assert not report.ok
    assert "top clue, column 1: sees 1, needs 2" in report.violations
    assert "left clue, row 1: sees 1, needs 2" in report.violations
    assert "top clue, column 2: sees 2, needs 1" in report.violations


def test_verify_latin_and_givens():
    p = Puzzle(2, Clues.empty(2), ((None, 2), (None, None)))
    report = verify_solution(p, Grid([[1, 1], [1, 2]]))
    text = str(report)
    assert "row 1 is not a permutation" in text
    assert "column 1 is not a permutation" in text
    assert "given at row 1, column 2: has 1, needs 2" in text
    assert not verify_solution(p, Grid([[1]])).ok


def test_solution_text_round_trip():
    grids = [Grid([[1, 2], [2, 1]]), Grid([[2, 1], [1, 2]])]
    assert parse_solutions(format_solutions(grids)) == grids
    assert parse_grid("# header\n1 2\n2 1\n") == grids[0]
    with pytest.raises(PuzzleFormatError):
        parse_grid(format_solutions(grids))


def test_fixtures_parse(fixtures_dir):
    for path in fixtures_dir.glob("*.txt"):
        p = parse_puzzle(path.read_text())
        assert p.n == 7
