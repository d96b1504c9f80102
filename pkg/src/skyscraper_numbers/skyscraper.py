"""Skyscraper numbers f_n(a, b).

``f_n(a, b)`` is the number of permutations of ``1..n`` with exactly ``a``
left-to-right maxima and ``b`` right-to-left maxima, i.e. the number of ways
to fill one row of an ``n``-wide skyscraper puzzle whose end clues are
``a`` (left) and ``b`` (right).

Two formulas are provided. :func:`skyscraper_number` splits each
permutation at the tallest building and convolves Stirling numbers over the
split position; :func:`skyscraper_number_closed` uses
``f_n(a, b) = C(a+b-2, a-1) * c(n-1, a+b-2)``. The closed form is the default
path everywhere, the convolution is kept as an independent check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .combinatorics import binomial, stirling_first_unsigned, stirling_row

__all__ = [
    "MaxPairReport",
    "SequenceTerm",
    "SkyTable",
    "VisibilityPair",
    "max_pairs",
    "row_sum",
    "sequence",
    "skyscraper_number",
    "skyscraper_number_closed",
    "skyscraper_table",
    "support",
]


class VisibilityPair(NamedTuple):
    left: int
    right: int

    def swapped(self) -> "VisibilityPair":
        return VisibilityPair(self.right, self.left)


def skyscraper_number(n: int, a: int, b: int) -> int:
    """f_n(a, b) via the split-at-the-maximum convolution.

    With the tallest building at position ``k + 1`` the ``k`` buildings to its
    left need ``a - 1`` left-to-right maxima and the ``n - k - 1`` to its right
    need ``b - 1`` right-to-left maxima::

        f_n(a, b) = sum_{k=0}^{n-1} C(n-1, k) c(k, a-1) c(n-k-1, b-1)

    Out-of-range ``a`` or ``b`` give 0.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if a < 1 or b < 1:
        return 0
    total = 0
    for k in range(n):
        left = stirling_first_unsigned(k, a - 1)
        if not left:
            continue
        right = stirling_first_unsigned(n - k - 1, b - 1)
        if right:
            total += binomial(n - 1, k) * left * right
    return total


def skyscraper_number_closed(n: int, a: int, b: int) -> int:
    """f_n(a, b) = C(a+b-2, a-1) * c(n-1, a+b-2)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if a < 1 or b < 1:
        return 0
    s = a + b - 2
    return binomial(s, a - 1) * stirling_first_unsigned(n - 1, s)


_METHODS = {
    "closed": skyscraper_number_closed,
    "convolution": skyscraper_number,
}


def _resolve(method: str):
    try:
        return _METHODS[method]
    except KeyError:
        raise ValueError(
            f"unknown method {method!r}; expected one of {sorted(_METHODS)}"
        ) from None


def support(n: int, a: int, b: int) -> bool:
    """True iff f_n(a, b) > 0.

    For n >= 2 the clue sum must lie in 3..n+1; the single-building row is
    the one case where (1, 1) is attainable.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if a < 1 or b < 1:
        return False
    s = a + b
    return s <= n + 1 and (s >= 3 or n == 1)


@dataclass(frozen=True)
class SkyTable:
    """The n-by-n matrix of f_n(a, b), indexed from 1 on both axes."""

    n: int
    entries: tuple[tuple[int, ...], ...]

    def __getitem__(self, key: tuple[int, int]) -> int:
        a, b = key
        if not (1 <= a <= self.n and 1 <= b <= self.n):
            return 0
        return self.entries[a - 1][b - 1]

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def total(self) -> int:
        return sum(sum(r) for r in self.entries)

    def items(self) -> Iterator[tuple[VisibilityPair, int]]:
        for a, row in enumerate(self.entries, start=1):
            for b, value in enumerate(row, start=1):
                yield VisibilityPair(a, b), value


def skyscraper_table(n: int, method: str = "closed") -> SkyTable:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if method == "closed":
        # one Stirling row serves every entry
        crow = stirling_row(n - 1)

        def entry(a: int, b: int) -> int:
            s = a + b - 2
            return binomial(s, a - 1) * crow[s] if s <= n - 1 else 0
    else:
        fn = _resolve(method)

        def entry(a: int, b: int) -> int:
            return fn(n, a, b)

    entries = tuple(
        tuple(entry(a, b) for b in range(1, n + 1)) for a in range(1, n + 1)
    )
    return SkyTable(n, entries)


def row_sum(n: int, a: int) -> int:
    """Sum over b of f_n(a, b); equals c(n, a)."""
    if not 1 <= a <= n:
        raise ValueError(f"need 1 <= a <= n, got n={n}, a={a}")
    return sum(skyscraper_number_closed(n, a, b) for b in range(1, n + 1))


@dataclass(frozen=True)
class MaxPairReport:
    n: int
    max_value: int
    pairs: tuple[tuple[int, int], ...]
    canonical_pair: tuple[int, int]


def max_pairs(n: int, method: str = "closed") -> MaxPairReport:
    """Find the least restrictive clue pairs (a <= b) for width ``n``."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    fn = _resolve(method)
    best = -1
    pairs: list[tuple[int, int]] = []
    for a in range(1, n + 1):
        for b in range(a, n + 1):
            value = fn(n, a, b)
            if value > best:
                best, pairs = value, [(a, b)]
            elif value == best:
                pairs.append((a, b))
    # scan order is lexicographic, so pairs[0] is already the smallest
    return MaxPairReport(n, best, tuple(pairs), pairs[0])


class SequenceTerm(NamedTuple):
    n: int
    max_value: int
    canonical_pair: tuple[int, int]


def sequence(max_n: int, method: str = "closed") -> list[SequenceTerm]:
    """Largest entry of each f_n table for n = 1..max_n (OEIS A218531)."""
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    out = []
    for n in range(1, max_n + 1):
        rep = max_pairs(n, method)
        out.append(SequenceTerm(n, rep.max_value, rep.canonical_pair))
    return out
