import itertools
import math

import pytest
from hypothesis import given, strategies as st

from skyscraper_numbers.combinatorics import stirling_first_unsigned
from skyscraper_numbers.oracle import (
    Permutation,
    ResourceLimitError,
    brute_counts,
    cycle_count,
    enumerate_rows,
    prefix_blocks,
    visibility,
)
from skyscraper_numbers.skyscraper import skyscraper_number

from naive import naive_cycles, naive_visibility


def test_permutation_validates():
    assert Permutation([2, 1, 3]) == (2, 1, 3)
    with pytest.raises(ValueError):
        Permutation([1, 1, 2])
    with pytest.raises(ValueError):
        Permutation([0, 1])


@pytest.mark.parametrize(
    "p, expected",
    [([2, 1, 3, 6, 4, 5], (3, 2)), ([1, 2, 3, 4, 5], (5, 1)), ([3, 1, 2], (1, 2)), ([1], (1, 1))],
)
def test_visibility(p, expected):
    assert visibility(p) == expected


def test_cycle_count_examples():
    assert cycle_count([1, 2, 3, 4]) == 4
    assert cycle_count([2, 1]) == 1
    dist = {}
    for p in itertools.permutations(range(1, 4)):
        k = cycle_count(p)
        dist[k] = dist.get(k, 0) + 1
    assert dist == {1: 2, 2: 3, 3: 1}


@given(st.permutations(list(range(1, 10))))
def test_visibility_and_cycles_match_naive(p):
    assert tuple(visibility(p)) == naive_visibility(p)
    assert cycle_count(p) == naive_cycles(p)


@given(st.integers(1, 8).flatmap(lambda n: st.permutations(list(range(1, n + 1)))))
def test_reversal_swaps_visibility(p):
    assert visibility(p[::-1]) == visibility(p).swapped()


@pytest.mark.parametrize("n", range(1, 9))
def test_split_at_maximum(n):
    for p in itertools.permutations(range(1, n + 1)):
        vis = visibility(p)
        k = p.index(n)
        head, tail = p[:k], p[k + 1:]
        assert (visibility(head).left if head else 0) == vis.left - 1
        assert (visibility(tail).right if tail else 0) == vis.right - 1


def test_brute_counts_examples():
    assert brute_counts(4).by_pair[2, 2] == 6
    c7 = brute_counts(7)
    assert c7.by_pair[2, 3] == 675
    assert c7.by_left[2] == 1764


@pytest.mark.parametrize("n", range(1, 9))
def test_brute_counts_match_formulas(n):
    counts = brute_counts(n)
    assert sum(counts.by_pair.values()) == math.factorial(n)
    assert sum(counts.by_cycles.values()) == math.factorial(n)
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            f = skyscraper_number(n, a, b)
            assert counts.by_pair.get((a, b), 0) == f
            assert ((a, b) in counts.by_pair) == (f > 0)
        assert counts.by_left[a] == counts.by_cycles[a] == stirling_first_unsigned(n, a)


@pytest.mark.parametrize("parts", [1, 2, 3, 7, 50, 5040])
def test_partitioned_sweep_is_deterministic(parts):
    assert brute_counts(7, parts=parts) == brute_counts(7)


def test_prefix_blocks_cover_lexicographic_order():
    n = 5
    for parts in (1, 3, 4, 9, 200):
        groups = prefix_blocks(n, parts)
        flat = []
        for g in groups:
            for prefix in g:
                rest = sorted(set(range(1, n + 1)) - set(prefix))
                flat.extend(prefix + t for t in itertools.permutations(rest))
        assert flat == list(itertools.permutations(range(1, n + 1)))


def test_parallel_sweep_matches_serial():
    assert brute_counts(7, workers=2) == brute_counts(7)


def test_brute_counts_cap():
    with pytest.raises(ResourceLimitError):
        brute_counts(11)
    with pytest.raises(ResourceLimitError):
        brute_counts(5, cap=4)


def test_enumerate_rows_examples():
    assert enumerate_rows(3, 3, 1) == [(1, 2, 3)]
    rows = enumerate_rows(4, 1, 2)
    assert len(rows) == 2 and all(r[0] == 4 for r in rows)
    assert enumerate_rows(3, 2, 2) == [(1, 3, 2), (2, 3, 1)]
    assert all(isinstance(r, Permutation) for r in rows)


def test_enumerate_rows_unconstrained_is_all_in_order():
    assert enumerate_rows(4) == list(itertools.permutations(range(1, 5)))
    assert len(enumerate_rows(9, left=1, right=None)) == math.factorial(8)


def test_enumerate_rows_limit_and_cap():
    assert enumerate_rows(4, limit=3) == [(1, 2, 3, 4), (1, 2, 4, 3), (1, 3, 2, 4)]
    assert enumerate_rows(12, limit=2) == [tuple(range(1, 13)), tuple(range(1, 11)) + (12, 11)]
    with pytest.raises(ResourceLimitError):
        enumerate_rows(11, 2, 3)
    with pytest.raises(ValueError):
        enumerate_rows(4, 5, 1)


@pytest.mark.parametrize("n", range(1, 8))
def test_enumerate_rows_counts(n):
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            rows = enumerate_rows(n, a, b)
            assert len(rows) == skyscraper_number(n, a, b)
            assert rows == sorted(rows)


def test_enumerate_rows_single_clue_is_sorted_merge():
    rows = enumerate_rows(6, left=None, right=3)
    assert rows == sorted(rows)
    assert len(rows) == stirling_first_unsigned(6, 3)
