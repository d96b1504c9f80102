"""The least restrictive clue pair for each grid size.

For every n the largest entry of the f_n table sits on a pair (a, b) with
|a - b| <= 1, because each line a + b = s is a scaled row of Pascal's triangle.
"""

from skyscraper_numbers import max_pairs, sequence
from skyscraper_numbers.selfcheck import selfcheck

for term in sequence(30):
    print(f"{term.n:3d}  {term.canonical_pair}  {term.max_value}")

print(max_pairs(1))

# Compare with the published listing; two misprints are classified as errata.
for item in selfcheck():
    if item.status != "MATCH":
        print(item.line())
