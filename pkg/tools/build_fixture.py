"""Build the shipped 7x7 sample puzzles.

Start from a random order-7 Latin square, take its full clue set, then drop
clues one at a time (random order) as long as the solution stays unique.
The ``--givens`` variant first fixes a few cells and then thins the clues
harder, so the fixture exercises the given-cell path too.

    python tools/build_fixture.py --seed 2012 > tests/fixtures/sample7.txt
"""

import argparse
import random

from skyscraper_numbers.puzzle import Clues, Grid, Puzzle, clues_of_grid, puzzle_to_text
from skyscraper_numbers.solver import solve


def random_latin_square(n, rng):
    """Cell-by-cell backtracking with shuffled value order."""
    cells = [[0] * n for _ in range(n)]

    def fill(i):
        if i == n * n:
            return True
        r, c = divmod(i, n)
        used = set(cells[r][:c]) | {cells[k][c] for k in range(r)}
        values = [v for v in range(1, n + 1) if v not in used]
        rng.shuffle(values)
        for v in values:
            cells[r][c] = v
            if fill(i + 1):
                return True
        cells[r][c] = 0
        return False

    fill(0)
    return Grid(tuple(tuple(row) for row in cells))


def thin(puzzle, rng):
    n = puzzle.n
    sides = {s: list(getattr(puzzle.clues, s)) for s in ("top", "bottom", "left", "right")}
    slots = [(s, i) for s in sides for i in range(n)]
    rng.shuffle(slots)
    for side, i in slots:
        saved = sides[side][i]
        sides[side][i] = None
        trial = Puzzle(n, Clues.from_lists(*sides.values()), puzzle.givens)
        if solve(trial).status != "unique":
            sides[side][i] = saved
    return Puzzle(n, Clues.from_lists(*sides.values()), puzzle.givens)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=2012)
    ap.add_argument("--n", type=int, default=7)
    ap.add_argument("--givens", type=int, default=0, help="number of cells to pre-fill")
    args = ap.parse_args()
    rng = random.Random(args.seed)
    while True:
        g = random_latin_square(args.n, rng)
        if solve(Puzzle(args.n, clues_of_grid(g))).status == "unique":
            break
    givens = [[None] * args.n for _ in range(args.n)]
    cells = [(r, c) for r in range(args.n) for c in range(args.n)]
    for r, c in rng.sample(cells, args.givens):
        givens[r][c] = g.cells[r][c]
    start = Puzzle(args.n, clues_of_grid(g), tuple(tuple(r) for r in givens))
    p = thin(start, rng)
    result = solve(p)
    assert result.status == "unique" and result.solutions[0] == g
    print(f"# {args.n}x{args.n} skyscraper puzzle, seed {args.seed}, {p.clues.count()} clues")
    print("# unique solution:")
    for row in g.cells:
        print("#   " + " ".join(map(str, row)))
    print(puzzle_to_text(p), end="")


if __name__ == "__main__":
    main()
