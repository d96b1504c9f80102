"""Compare computed values against the stored published values.

Every comparison ends up as MATCH, FAIL or PAPER-ERRATUM. The last is only
possible for items listed in :data:`ERRATA`; anything else that disagrees is
a FAIL, i.e. a bug on our side until shown otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass

from .combinatorics import stirling_row
from .reference import REFERENCE, ReferenceData
from .skyscraper import max_pairs, row_sum, skyscraper_table

__all__ = ["ERRATA", "CheckItem", "MATCH", "FAIL", "ERRATUM", "selfcheck", "summary"]

MATCH = "MATCH"
FAIL = "FAIL"
ERRATUM = "PAPER-ERRATUM"

#: Pre-registered misprints: item id -> explanation.
ERRATA = {
    "sequence[13]": "printed term is smaller than term 12; both formulas agree on the computed value",
    "pairs[14]": "printed with an opening brace: {3, 3)",
}


@dataclass(frozen=True)
class CheckItem:
    item: str
    status: str
    expected: str
    computed: str
    note: str = ""

    def line(self) -> str:
        text = f"{self.status:<13} {self.item:<14} printed={self.expected} computed={self.computed}"
        if self.note:
            text += f"  ({self.note})"
        return text


def _classify(item: str, agrees: bool) -> tuple[str, str]:
    if agrees:
        return MATCH, ""
    if item in ERRATA:
        return ERRATUM, ERRATA[item]
    return FAIL, ""


def selfcheck(ref: ReferenceData = REFERENCE) -> list[CheckItem]:
    items: list[CheckItem] = []

    def add(item: str, expected, computed, agrees=None):
        ok = expected == computed if agrees is None else agrees
        status, note = _classify(item, ok)
        items.append(CheckItem(item, status, str(expected), str(computed), note))

    for n, printed in ref.table1.items():
        # printed rows start at b = 2, i.e. c(n-1, 1)
        add(f"table1[n={n}]", tuple(printed), tuple(stirling_row(n - 1)[1:]))

    table = skyscraper_table(7)
    for a, printed in enumerate(ref.table2, start=1):
        add(f"table2[a={a}]", tuple(printed), table.entries[a - 1])

    add("row_sums[7]", tuple(ref.row_sums_7), tuple(row_sum(7, a) for a in range(1, 8)))

    seq = ref.sequence_printed
    pairs = ref.pairs_printed
    reports = {n: max_pairs(n) for n in range(1, max(len(seq), len(pairs)) + 1)}
    for n, printed in enumerate(seq, start=1):
        add(f"sequence[{n}]", printed, reports[n].max_value)
    for n, (token, pair) in enumerate(pairs, start=1):
        computed = reports[n].canonical_pair
        well_formed = token.startswith("(") and token.endswith(")")
        add(f"pairs[{n}]", token, computed, agrees=well_formed and pair == computed)
    return items


def summary(items: list[CheckItem]) -> dict[str, int]:
    counts = {MATCH: 0, FAIL: 0, ERRATUM: 0}
    for it in items:
        counts[it.status] += 1
    return counts
