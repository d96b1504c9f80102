"""Brute-force ground truth by exhaustive permutation enumeration.

Nothing here uses the Stirling table or the skyscraper formulas; every count
comes from scanning actual permutations, so it can be compared against the
formulas as an independent oracle.
"""

from __future__ import annotations

import heapq
import itertools
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence

from .skyscraper import VisibilityPair

__all__ = [
    "ENUMERATION_CAP",
    "BruteCounts",
    "Permutation",
    "ResourceLimitError",
    "brute_counts",
    "cycle_count",
    "enumerate_rows",
    "prefix_blocks",
    "visibility",
]

#: Largest n swept exhaustively unless the caller raises the cap explicitly.
ENUMERATION_CAP = 10

# rows for n up to this size are classified once and kept in memory
_CACHE_N = 8


class ResourceLimitError(RuntimeError):
    """Raised when a request would exceed a configured enumeration budget."""


class Permutation(tuple):
    """A row of buildings in one-line notation: each of 1..n exactly once."""

    def __new__(cls, heights: Iterable[int]):
        self = super().__new__(cls, heights)
        if sorted(self) != list(range(1, len(self) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self)}: {tuple(self)}")
        return self

    @classmethod
    def _trusted(cls, heights: Iterable[int]) -> "Permutation":
        return tuple.__new__(cls, heights)

    @property
    def heights(self) -> tuple[int, ...]:
        return tuple(self)

    def reversed(self) -> "Permutation":
        return Permutation._trusted(self[::-1])

    def __repr__(self) -> str:
        return f"Permutation({list(self)})"


def _left_maxima(seq: Sequence[int]) -> int:
    count = 0
    tallest = 0
    for h in seq:
        if h > tallest:
            tallest = h
            count += 1
    return count


def visibility(p: Sequence[int]) -> VisibilityPair:
    """Numbers of buildings visible from the left and from the right."""
    return VisibilityPair(_left_maxima(p), _left_maxima(p[::-1]))


def cycle_count(p: Sequence[int]) -> int:
    """Number of cycles of ``i -> p[i]`` (1-based)."""
    n = len(p)
    seen = [False] * (n + 1)
    cycles = 0
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cycles += 1
        i = start
        while not seen[i]:
            seen[i] = True
            i = p[i - 1]
    return cycles


@dataclass
class BruteCounts:
    n: int
    by_pair: dict[tuple[int, int], int] = field(default_factory=dict)
    by_left: dict[int, int] = field(default_factory=dict)
    by_cycles: dict[int, int] = field(default_factory=dict)

    def merge(self, other: "BruteCounts") -> None:
        for mine, theirs in (
            (self.by_pair, other.by_pair),
            (self.by_left, other.by_left),
            (self.by_cycles, other.by_cycles),
        ):
            for k, v in theirs.items():
                mine[k] = mine.get(k, 0) + v

    def sorted(self) -> "BruteCounts":
        return BruteCounts(
            self.n,
            dict(sorted(self.by_pair.items())),
            dict(sorted(self.by_left.items())),
            dict(sorted(self.by_cycles.items())),
        )


def prefix_blocks(n: int, parts: int) -> list[list[tuple[int, ...]]]:
    """Split the lexicographic order of S_n into ``parts`` contiguous ranges.

    Each range is a list of fixed prefixes; a prefix of length ``d`` covers
    ranks ``[r, r + (n-d)!)`` for some ``r``. The prefix depth is the smallest
    that yields at least ``parts`` blocks.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    parts = max(1, parts)
    depth = 0
    while depth < n and math.perm(n, depth) < parts:
        depth += 1
    prefixes = list(itertools.permutations(range(1, n + 1), depth))
    size, extra = divmod(len(prefixes), parts)
    groups = []
    start = 0
    for i in range(min(parts, len(prefixes))):
        stop = start + size + (1 if i < extra else 0)
        groups.append(prefixes[start:stop])
        start = stop
    return groups


def _tally_prefixes(n: int, prefixes: list[tuple[int, ...]]) -> BruteCounts:
    pair_tally: Counter = Counter()
    left_tally: Counter = Counter()
    cycle_tally: Counter = Counter()
    universe = set(range(1, n + 1))
    for prefix in prefixes:
        rest = sorted(universe.difference(prefix))
        for tail in itertools.permutations(rest):
            p = prefix + tail
            left = 0
            tallest = 0
            for h in p:
                if h > tallest:
                    tallest = h
                    left += 1
            right = 0
            tallest = 0
            for h in reversed(p):
                if h > tallest:
                    tallest = h
                    right += 1
            pair_tally[left, right] += 1
            left_tally[left] += 1
            cycle_tally[cycle_count(p)] += 1
    return BruteCounts(n, dict(pair_tally), dict(left_tally), dict(cycle_tally))


def _tally_job(args: tuple[int, list[tuple[int, ...]]]) -> BruteCounts:
    return _tally_prefixes(*args)


def brute_counts(
    n: int, *, workers: int = 1, parts: Optional[int] = None, cap: int = ENUMERATION_CAP
) -> BruteCounts:
    """Tally visibility pairs, left-maxima and cycle counts over all of S_n.

    The sweep is split into contiguous rank ranges that are tallied
    independently and summed, so the result does not depend on ``workers``
    or ``parts``.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > cap:
        raise ResourceLimitError(
            f"exhaustive sweep of {n}! permutations exceeds cap n <= {cap}"
        )
    if parts is None:
        parts = workers if workers > 1 else 1
    groups = prefix_blocks(n, parts)
    result = BruteCounts(n)
    if workers > 1 and len(groups) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for partial in pool.map(_tally_job, [(n, g) for g in groups]):
                result.merge(partial)
    else:
        for g in groups:
            result.merge(_tally_prefixes(n, g))
    return result.sorted()


def _check_clue(n: int, name: str, value: Optional[int]) -> None:
    if value is not None and not 1 <= value <= n:
        raise ValueError(f"{name} clue must be in 1..{n}, got {value}")


@lru_cache(maxsize=None)
def _classified(n: int) -> dict[tuple[int, int], tuple[Permutation, ...]]:
    buckets: dict[tuple[int, int], list[Permutation]] = {}
    for p in itertools.permutations(range(1, n + 1)):
        buckets.setdefault(visibility(p), []).append(Permutation._trusted(p))
    return {k: tuple(v) for k, v in buckets.items()}


def _iter_rows(
    n: int, left: Optional[int], right: Optional[int]
) -> Iterator[Permutation]:
    if n <= _CACHE_N:
        table = _classified(n)
        keys = sorted(
            k
            for k in table
            if (left is None or k[0] == left) and (right is None or k[1] == right)
        )
        if len(keys) == 1:
            yield from table[keys[0]]
        elif keys:
            # each bucket is sorted; merging keeps the global order
            yield from heapq.merge(*(table[k] for k in keys))
        return
    for p in itertools.permutations(range(1, n + 1)):
        if left is not None and _left_maxima(p) != left:
            continue
        if right is not None and _left_maxima(p[::-1]) != right:
            continue
        yield Permutation._trusted(p)


def enumerate_rows(
    n: int,
    left: Optional[int] = None,
    right: Optional[int] = None,
    limit: Optional[int] = None,
    *,
    cap: int = ENUMERATION_CAP,
) -> list[Permutation]:
    """All rows of width ``n`` matching the given end clues, lexicographically.

    Absent clues are unconstrained. Without ``limit`` the full scan is refused
    beyond ``cap``.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    _check_clue(n, "left", left)
    _check_clue(n, "right", right)
    if limit is None and n > cap:
        raise ResourceLimitError(
            f"enumerating rows of width {n} without a limit exceeds cap n <= {cap}"
        )
    rows = _iter_rows(n, left, right)
    if limit is not None:
        return list(itertools.islice(rows, max(0, limit)))
    return list(rows)
