"""Exact integer primitives: factorials, binomials and unsigned Stirling numbers.

All values are Python ints, so nothing overflows and nothing is ever rounded.
"""

from __future__ import annotations

import math
import threading

__all__ = [
    "StirlingTable",
    "binomial",
    "factorial",
    "rising_factorial_coeffs",
    "stirling_first_unsigned",
    "stirling_row",
    "stirling_summed",
]


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial needs n >= 0, got {n}")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """C(n, k), with 0 for k outside 0..n."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


class StirlingTable:
    """Triangle of unsigned Stirling numbers of the first kind, grown on demand.

    ``c(n, a)`` counts permutations of length ``n`` with ``a`` left-to-right
    maxima (equivalently, with ``a`` cycles). Rows are published as tuples and
    never modified afterwards; growth is serialised by a lock so concurrent
    callers asking for the same row see identical results.
    """

    def __init__(self) -> None:
        self._rows: list[tuple[int, ...]] = [(1,)]
        self._lock = threading.Lock()

    @property
    def max_n(self) -> int:
        return len(self._rows) - 1

    def _extend(self, n: int) -> None:
        with self._lock:
            rows = self._rows
            while len(rows) <= n:
                m = len(rows)
                prev = rows[-1]
                # c(m, a) = c(m-1, a-1) + (m-1) c(m-1, a)
                new = [0] * (m + 1)
                for a in range(1, m + 1):
                    left = prev[a - 1]
                    right = prev[a] if a < m else 0
                    new[a] = left + (m - 1) * right
                rows.append(tuple(new))

    def row(self, n: int) -> tuple[int, ...]:
        if n < 0:
            raise ValueError(f"row index must be >= 0, got {n}")
        if n >= len(self._rows):
            self._extend(n)
        return self._rows[n]

    def __call__(self, n: int, a: int) -> int:
        if n < 0 or a < 0 or a > n:
            return 0
        return self.row(n)[a]


_TABLE = StirlingTable()


def stirling_first_unsigned(n: int, a: int) -> int:
    """Unsigned Stirling number c(n, a); zero outside 0 <= a <= n."""
    return _TABLE(n, a)


def stirling_row(n: int) -> list[int]:
    """[c(n, 0), ..., c(n, n)]."""
    return list(_TABLE.row(n))


def stirling_summed(n: int, a: int) -> int:
    """c(n, a) from the unrolled recurrence.

    Peeling the two-term recurrence k times gives
    ``c(n, a) = sum_{k=1..n} (n-1)!/(n-k)! * c(n-k, a-1)`` for n >= 1,
    where the k-th term places the shortest remaining building first after
    k-1 hidden ones. Independent of the table's build order only through
    lower rows, so it doubles as a consistency check.
    """
    if n == 0:
        return 1 if a == 0 else 0
    total = 0
    falling = 1  # (n-1)!/(n-k)!
    for k in range(1, n + 1):
        total += falling * stirling_first_unsigned(n - k, a - 1)
        falling *= n - k
    return total


def rising_factorial_coeffs(n: int) -> list[int]:
    """Coefficients [e_0, ..., e_n] of (x + 1)(x + 2)...(x + n).

    Computed by direct polynomial multiplication, not from the Stirling
    table, so ``e_k == c(n + 1, k + 1)`` is a genuine cross-check.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    coeffs = [1]
    for i in range(1, n + 1):
        # multiply by (x + i)
        nxt = [0] * (len(coeffs) + 1)
        for k, e in enumerate(coeffs):
            nxt[k] += i * e
            nxt[k + 1] += e
        coeffs = nxt
    return coeffs
