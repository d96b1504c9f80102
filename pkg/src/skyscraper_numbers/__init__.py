"""Exact skyscraper numbers, brute-force oracles and a skyscraper puzzle solver."""

from .combinatorics import (
    binomial,
    factorial,
    rising_factorial_coeffs,
    stirling_first_unsigned,
    stirling_row,
)
from .oracle import (
    BruteCounts,
    Permutation,
    ResourceLimitError,
    brute_counts,
    cycle_count,
    enumerate_rows,
    visibility,
)
from .puzzle import (
    Clues,
    Grid,
    Puzzle,
    PuzzleFormatError,
    PuzzleRangeError,
    clues_of_grid,
    parse_puzzle,
    verify_solution,
)
from .skyscraper import (
    MaxPairReport,
    SkyTable,
    VisibilityPair,
    max_pairs,
    row_sum,
    sequence,
    skyscraper_number,
    skyscraper_number_closed,
    skyscraper_table,
    support,
)
from .solver import SolveResult, count_solutions, solve

__version__ = "0.1.0"
