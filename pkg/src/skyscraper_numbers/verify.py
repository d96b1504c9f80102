"""Invariant suites: formulas against each other and against brute force.

Each suite returns a :class:`SuiteResult`; :func:`run_all` runs all of them
up to a chosen ``n_max``. The brute-force suites are capped separately since
they cost ``n!``.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Callable

from . import combinatorics as cb
from . import oracle
from . import skyscraper as sky
from .puzzle import Clues, Puzzle, puzzle_from_grid, verify_solution
from .solver import line_candidates, solve

__all__ = ["SuiteResult", "SUITES", "run_all"]


@dataclass(frozen=True)
class SuiteResult:
    name: str
    ok: bool
    checked: int
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        tag = "PASS" if self.ok else "FAIL"
        text = f"{tag}  {self.name:<34} {self.checked:>7} checks  {self.seconds:6.2f}s"
        if self.detail:
            text += f"  {self.detail}"
        return text


class _Tally:
    def __init__(self):
        self.checked = 0
        self.first_failure = ""

    def check(self, ok: bool, what: str) -> None:
        self.checked += 1
        if not ok and not self.first_failure:
            self.first_failure = what

    @property
    def ok(self) -> bool:
        return not self.first_failure


def stirling_recurrences(n_max: int, t: _Tally) -> None:
    for n in range(1, n_max + 1):
        for a in range(1, n + 1):
            c = cb.stirling_first_unsigned(n, a)
            two_term = cb.stirling_first_unsigned(n - 1, a - 1) + (n - 1) * cb.stirling_first_unsigned(n - 1, a)
            t.check(c == two_term, f"two-term recurrence at c({n},{a})")
            t.check(c == cb.stirling_summed(n, a), f"summed recurrence at c({n},{a})")


def stirling_row_sums(n_max: int, t: _Tally) -> None:
    for n in range(n_max + 1):
        t.check(sum(cb.stirling_row(n)) == cb.factorial(n), f"row {n} sum")


def rising_factorial(n_max: int, t: _Tally) -> None:
    for n in range(n_max + 1):
        coeffs = cb.rising_factorial_coeffs(n)
        for k, e in enumerate(coeffs):
            t.check(e == cb.stirling_first_unsigned(n + 1, k + 1), f"coefficient x^{k} of n={n}")


def formula_equivalence(n_max: int, t: _Tally) -> None:
    for n in range(1, n_max + 1):
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                t.check(
                    sky.skyscraper_number(n, a, b) == sky.skyscraper_number_closed(n, a, b),
                    f"f_{n}({a},{b}) convolution vs closed form",
                )


def table_shape(n_max: int, t: _Tally) -> None:
    for n in range(1, n_max + 1):
        table = sky.skyscraper_table(n)
        t.check(table.total() == cb.factorial(n), f"total mass n={n}")
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                t.check(table[a, b] == table[b, a], f"symmetry f_{n}({a},{b})")
                t.check(sky.support(n, a, b) == (table[a, b] > 0), f"support f_{n}({a},{b})")
            t.check(table[a, n + 1 - a] == cb.binomial(n - 1, a - 1), f"antidiagonal n={n} a={a}")
        t.check(table[n, 1] == 1, f"f_{n}({n},1) = 1")
        if n >= 2:
            t.check(table[1, 2] == cb.factorial(n - 2), f"f_{n}(1,2) = (n-2)!")


def pascal_lines(n_max: int, t: _Tally) -> None:
    for n in range(1, n_max + 1):
        for s in range(2, n + 2):
            scale = cb.stirling_first_unsigned(n - 1, s - 2)
            line = [sky.skyscraper_number(n, a, s - a) for a in range(1, s)]
            pascal = [scale * cb.binomial(s - 2, a - 1) for a in range(1, s)]
            t.check(line == pascal, f"line a+b={s} of f_{n}")


def row_sum_identity(n_max: int, t: _Tally) -> None:
    for n in range(1, n_max + 1):
        for a in range(1, n + 1):
            rs = sky.row_sum(n, a)
            t.check(rs == cb.stirling_first_unsigned(n, a), f"row sum n={n} a={a}")
            t.check(rs == sky.skyscraper_number(n + 1, a + 1, 1), f"row sum vs f_{n + 1}({a + 1},1)")


def maximizing_pairs(n_max: int, t: _Tally) -> None:
    for n in range(1, max(n_max, 30) + 1):
        rep = sky.max_pairs(n)
        for a, b in rep.pairs:
            t.check(abs(a - b) <= 1, f"maximizing pair ({a},{b}) at n={n}")


def oracle_equivalence(n_max: int, t: _Tally, workers: int = 1) -> None:
    for n in range(1, n_max + 1):
        counts = oracle.brute_counts(n, workers=workers if n >= 8 else 1)
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                t.check(
                    counts.by_pair.get((a, b), 0) == sky.skyscraper_number(n, a, b),
                    f"brute by_pair n={n} ({a},{b})",
                )
            c = cb.stirling_first_unsigned(n, a)
            t.check(counts.by_left.get(a, 0) == c, f"brute by_left n={n} a={a}")
            t.check(counts.by_cycles.get(a, 0) == c, f"brute by_cycles n={n} a={a}")
        t.check(all(v > 0 for v in counts.by_pair.values()), f"no zero keys n={n}")


def row_enumeration(n_max: int, t: _Tally) -> None:
    for n in range(1, min(n_max, 7) + 1):
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                rows = oracle.enumerate_rows(n, a, b)
                t.check(len(rows) == sky.skyscraper_number(n, a, b), f"|rows({n},{a},{b})|")


def permutation_structure(n_max: int, t: _Tally) -> None:
    for n in range(1, n_max + 1):
        for p in itertools.permutations(range(1, n + 1)):
            vis = oracle.visibility(p)
            t.check(oracle.visibility(p[::-1]) == vis.swapped(), f"reversal of {p}")
            k = p.index(n)
            left_part, right_part = p[:k], p[k + 1:]
            t.check(
                oracle._left_maxima(left_part) == vis.left - 1
                and oracle._left_maxima(right_part[::-1]) == vis.right - 1,
                f"split at maximum of {p}",
            )


LATIN_COUNTS = {1: 1, 2: 2, 3: 12, 4: 576}


def solver_round_trip(n_max: int, t: _Tally) -> None:
    for n in range(1, min(n_max, 4) + 1):
        everything = solve(Puzzle(n, Clues.empty(n)), max_solutions=None)
        t.check(everything.count == LATIN_COUNTS[n], f"Latin squares of order {n}")
        for g in everything.solutions:
            p = puzzle_from_grid(g)
            result = solve(p, max_solutions=None)
            t.check(g in result.solutions, f"full-clue puzzle of {g.cells}")
            t.check(all(verify_solution(p, s).ok for s in result.solutions), f"solutions of {g.cells} verify")
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                t.check(len(line_candidates(n, a, b)) == sky.skyscraper_number(n, a, b), f"line candidates ({n},{a},{b})")


# (name, function, how n_max maps to the suite's own bound)
SUITES: list[tuple[str, Callable[[int, _Tally], None], Callable[[int], int]]] = [
    ("stirling recurrences", stirling_recurrences, lambda n: max(n, 12)),
    ("stirling row sums", stirling_row_sums, lambda n: max(n, 12)),
    ("rising factorial coefficients", rising_factorial, lambda n: max(n, 10)),
    ("convolution = closed form", formula_equivalence, lambda n: max(n, 15)),
    ("table symmetry/mass/support", table_shape, lambda n: max(n, 9)),
    ("pascal rescaling", pascal_lines, lambda n: max(n, 15)),
    ("row sums = stirling", row_sum_identity, lambda n: max(n, 15)),
    ("maximizing pairs |a-b| <= 1", maximizing_pairs, lambda n: max(n, 30)),
    ("brute force = formulas", oracle_equivalence, lambda n: n),
    ("row enumeration counts", row_enumeration, lambda n: n),
    ("reversal and split at maximum", permutation_structure, lambda n: n),
    ("solver round trip n<=4", solver_round_trip, lambda n: n),
]


def run_all(n_max: int = 8, workers: int = 1) -> list[SuiteResult]:
    """Run every suite; brute-force suites use ``n_max`` as their bound.

    ``workers`` > 1 spreads the largest permutation sweeps over processes.
    """
    if n_max > oracle.ENUMERATION_CAP:
        raise oracle.ResourceLimitError(
            f"n_max {n_max} exceeds the enumeration cap {oracle.ENUMERATION_CAP}"
        )
    results = []
    for name, fn, bound in SUITES:
        t = _Tally()
        start = time.perf_counter()
        if fn is oracle_equivalence:
            fn(bound(n_max), t, workers)
        else:
            fn(bound(n_max), t)
        elapsed = time.perf_counter() - start
        results.append(SuiteResult(name, t.ok, t.checked, t.first_failure, elapsed))
    return results
