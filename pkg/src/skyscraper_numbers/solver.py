"""Exact skyscraper solver: line candidates, domain propagation, backtracking.

Every row and column keeps the list of permutations still compatible with its
clue pair and with the current cell domains. The cell domain is narrowed to
the values some surviving candidate puts there, from both directions, until
nothing changes. Search then branches on the line with the fewest candidates,
which is exactly the line whose clue pair has the smallest skyscraper number
once the grid interplay is taken into account.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .oracle import ResourceLimitError, enumerate_rows
from .puzzle import Grid, Puzzle

__all__ = ["SolveResult", "count_solutions", "line_candidates", "solve"]

UNIQUE = "unique"
MULTIPLE = "multiple"
UNSATISFIABLE = "unsatisfiable"
TRUNCATED = "truncated"


@dataclass(frozen=True)
class SolveResult:
    status: str
    solutions: tuple[Grid, ...]
    count: Optional[int]
    nodes_expanded: int


def line_candidates(n: int, start: Optional[int], end: Optional[int]) -> list[tuple[int, ...]]:
    """Rows of width ``n`` seen as ``start`` buildings from one end, ``end`` from the other."""
    return [tuple(p) for p in enumerate_rows(n, start, end)]


class _Stop(Exception):
    pass


class _Search:
    def __init__(self, puzzle: Puzzle, keep: Optional[int], stop_after: Optional[int],
                 max_nodes: Optional[int]):
        self.n = n = puzzle.n
        self.keep = keep
        self.stop_after = stop_after
        self.max_nodes = max_nodes
        self.nodes = 0
        self.count = 0
        self.found: list[Grid] = []
        self.exhausted = False

        # lines 0..n-1 are rows, n..2n-1 columns; cells are row-major indices
        self.lines = [[r * n + c for c in range(n)] for r in range(n)]
        self.lines += [[r * n + c for r in range(n)] for c in range(n)]
        # (line, position within that line) for the row and column through a cell
        self.crossings = [((i // n, i % n), (n + i % n, i // n)) for i in range(n * n)]

        clues = puzzle.clues
        pairs = [clues.row_pair(r) for r in range(n)] + [clues.column_pair(c) for c in range(n)]
        cache: dict = {}
        self.initial = []
        for pair in pairs:
            if pair not in cache:
                cache[pair] = line_candidates(n, *pair)
            self.initial.append(cache[pair])

        full = (1 << (n + 1)) - 2  # bits 1..n
        self.domains0 = [full] * (n * n)
        for r, row in enumerate(puzzle.givens):
            for c, v in enumerate(row):
                if v is not None:
                    self.domains0[r * n + c] = 1 << v

    def _propagate(self, domains: list[int], cands: list[list], dirty: dict[int, set[int]]) -> bool:
        """Filter candidates and narrow domains to a fixpoint. False on wipe-out."""
        lines = self.lines
        crossings = self.crossings
        while dirty:
            li = min(dirty)
            positions = dirty.pop(li)
            cells = lines[li]
            checks = [(pos, domains[cells[pos]]) for pos in positions]
            current = cands[li]
            kept = [
                cand for cand in current
                if all(mask >> cand[pos] & 1 for pos, mask in checks)
            ]
            if not kept:
                return False
            if len(kept) != len(current):
                cands[li] = kept
            for pos, cell in enumerate(cells):
                dom = domains[cell]
                if dom & (dom - 1) == 0:
                    # singleton domains already agree with every kept candidate
                    continue
                support = 0
                for v in {cand[pos] for cand in kept}:
                    support |= 1 << v
                narrowed = dom & support
                if narrowed != dom:
                    domains[cell] = narrowed
                    for other, opos in crossings[cell]:
                        if other != li:
                            dirty.setdefault(other, set()).add(opos)
        return True

    def run(self) -> None:
        n = self.n
        domains = list(self.domains0)
        cands = [list(c) for c in self.initial]
        dirty = {li: set(range(n)) for li in range(2 * n)}
        try:
            if self._propagate(domains, cands, dirty):
                self._dfs(domains, cands)
            self.exhausted = True
        except _Stop:
            pass

    def _dfs(self, domains: list[int], cands: list[list]) -> None:
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise ResourceLimitError(f"node budget {self.max_nodes} exceeded")
        branch = None
        for li, lc in enumerate(cands):
            if len(lc) > 1 and (branch is None or len(lc) < len(cands[branch])):
                branch = li
        if branch is None:
            self._record(cands)
            return
        cells = self.lines[branch]
        for cand in cands[branch]:
            doms = list(domains)
            sub = list(cands)
            sub[branch] = [cand]
            dirty: dict[int, set[int]] = {}
            for pos, cell in enumerate(cells):
                bit = 1 << cand[pos]
                if doms[cell] != bit:
                    doms[cell] = bit
                    for other, opos in self.crossings[cell]:
                        if other != branch:
                            dirty.setdefault(other, set()).add(opos)
            if self._propagate(doms, sub, dirty):
                self._dfs(doms, sub)

    def _record(self, cands: list[list]) -> None:
        n = self.n
        rows = tuple(tuple(cands[r][0]) for r in range(n))
        self.count += 1
        if self.keep is None or len(self.found) < self.keep:
            self.found.append(Grid(rows))
        if self.stop_after is not None and self.count >= self.stop_after:
            raise _Stop


def solve(p: Puzzle, max_solutions: Optional[int] = 2, *, max_nodes: Optional[int] = None) -> SolveResult:
    """Search for solutions of ``p``, stopping after ``max_solutions``.

    ``max_solutions=None`` enumerates everything. The default of 2 is enough
    to decide uniqueness. If the node budget runs out the status is
    ``"truncated"`` and ``count`` is None.
    """
    if max_solutions is not None and max_solutions < 1:
        raise ValueError("max_solutions must be >= 1 or None")
    search = _Search(p, keep=max_solutions, stop_after=max_solutions, max_nodes=max_nodes)
    try:
        search.run()
    except ResourceLimitError:
        return SolveResult(TRUNCATED, tuple(sorted(search.found)), None, search.nodes)
    found = tuple(sorted(search.found))
    if search.exhausted:
        count = search.count
        status = {0: UNSATISFIABLE, 1: UNIQUE}.get(count, MULTIPLE)
        return SolveResult(status, found, count, search.nodes)
    # stopped early at the solution cap
    status = MULTIPLE if search.count >= 2 else TRUNCATED
    return SolveResult(status, found, None, search.nodes)


def count_solutions(p: Puzzle, *, max_nodes: Optional[int] = None) -> int:
    """Exact number of solutions; raises ResourceLimitError past ``max_nodes``."""
    search = _Search(p, keep=0, stop_after=None, max_nodes=max_nodes)
    search.run()
    return search.count
