"""How many ways can one row of a skyscraper puzzle be filled?

Run with ``python demos/01_counting_rows.py``.
"""

from skyscraper_numbers import (
    enumerate_rows,
    skyscraper_number,
    skyscraper_number_closed,
    skyscraper_table,
    visibility,
)
from skyscraper_numbers.tableio import format_table

# A row is a permutation of heights 1..n. From the left of 2 1 3 6 4 5 you see
# 2, 3 and 6; from the right you see 5 and 6.
print(visibility([2, 1, 3, 6, 4, 5]))

# With end clues 1 and 2 the tallest building sits on the left and the second
# tallest on the right; the rest are free, so there are (n-2)! rows.
for row in enumerate_rows(4, left=1, right=2):
    print(row)

# Counting without listing. Both formulas give the same answer.
print(skyscraper_number(7, 2, 3), skyscraper_number_closed(7, 2, 3))

# The full table for n = 7. Zeros below the antidiagonal: the two clues can
# add up to at most n + 1.
print(format_table(skyscraper_table(7)))

# Counts stay exact far beyond 64 bits.
print(skyscraper_number(60, 5, 6))
