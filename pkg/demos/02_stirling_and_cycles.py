"""One-sided counts are unsigned Stirling numbers of the first kind.

The same numbers count permutations by left-to-right maxima, by cycles, and
appear as coefficients of (x + 1)(x + 2)...(x + n).
"""

from skyscraper_numbers import brute_counts, rising_factorial_coeffs, row_sum, stirling_row

n = 6
counts = brute_counts(n)
print("by left-to-right maxima:", [counts.by_left[a] for a in range(1, n + 1)])
print("by number of cycles:    ", [counts.by_cycles[a] for a in range(1, n + 1)])
print("Stirling row c(6, .):   ", stirling_row(n)[1:])
print("coefficients of (x+1)...(x+5):", rising_factorial_coeffs(n - 1))

# Summing a row of the f_7 table over the right clue recovers c(7, a).
print([row_sum(7, a) for a in range(1, 8)])
