"""Solving a full skyscraper puzzle.

Each row and column keeps the candidate permutations allowed by its two
clues; the solver intersects them cell by cell and branches on the tightest
line.
"""

from pathlib import Path

from skyscraper_numbers import count_solutions, parse_puzzle, solve, verify_solution
from skyscraper_numbers.puzzle import Grid, format_grid, puzzle_from_grid

fixture = Path(__file__).resolve().parents[1] / "tests" / "fixtures" / "sample7.txt"
puzzle = parse_puzzle(fixture.read_text())
result = solve(puzzle)
print(result.status, "after", result.nodes_expanded, "search nodes")
print(format_grid(result.solutions[0]))
print(verify_solution(puzzle, result.solutions[0]))

# Clue sets taken from a grid always admit that grid, but not always only it.
g = Grid([[1, 2, 3, 4], [2, 1, 4, 3], [3, 4, 1, 2], [4, 3, 2, 1]])
p = puzzle_from_grid(g)
print("solutions with the full clue set:", count_solutions(p))

# Latin squares of order 4, i.e. the puzzle with no clues at all.
print(count_solutions(parse_puzzle("4\n0 0 0 0\n0 0 0 0\n0 0 0 0\n0 0 0 0\n")))
