"""Published reference values, stored exactly as printed.

Known misprints are kept in the stored data on purpose. The comparison code
in :mod:`skyscraper_numbers.selfcheck` recognises them through a fixed
errata registry instead of editing the data.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

__all__ = ["REFERENCE", "ReferenceData", "parse_pair_tokens", "parse_sequence_text"]

# f_n(1, b) = c(n-1, b-1), rows n = 2..7, columns b = 2..n
_TABLE1 = {
    2: (1,),
    3: (1, 1),
    4: (2, 3, 1),
    5: (6, 11, 6, 1),
    6: (24, 50, 35, 10, 1),
    7: (120, 274, 225, 85, 15, 1),
}

# f_7(a, b), rows a = 1..7, columns b = 1..7
_TABLE2 = (
    (0, 120, 274, 225, 85, 15, 1),
    (120, 548, 675, 340, 75, 6, 0),
    (274, 675, 510, 150, 15, 0, 0),
    (225, 340, 150, 20, 0, 0, 0),
    (85, 75, 15, 0, 0, 0, 0),
    (15, 6, 0, 0, 0, 0, 0),
    (1, 0, 0, 0, 0, 0, 0),
)

_ROW_SUMS_7 = (720, 1764, 1624, 735, 175, 21, 1)

_SEQUENCE_TEXT = (
    "1, 1, 2, 6, 22, 105, 675, 4872, 40614, 403704, 4342080, 50457000, "
    "31548456, 8484089328, 121882518576, 1865935562400, 30341974222944, "
    "522466493255424, 9499883854364928, 181927524046316544"
)

_PAIRS_TEXT = (
    "(1, 1), (1, 2), (2, 2), (2, 2), (2, 2), (2, 3), (2, 3), (2, 3), "
    "(3, 3), (3, 3), (3, 3), (3, 3), (3, 3), {3, 3), (3, 3), (3, 3), "
    "(3, 3), (3, 3), (3, 3), (3, 3), (3, 4), (3, 4), (3, 4), (3, 4), "
    "(3, 4), (3, 4), (4, 4), (4, 4), (4, 4), (4, 4)"
)

_PAIR_TOKEN = re.compile(r"(\S)(\d+), (\d+)(\S)")


def parse_sequence_text(text: str) -> tuple[int, ...]:
    return tuple(int(tok) for tok in text.split(","))


def parse_pair_tokens(text: str) -> tuple[tuple[str, tuple[int, int]], ...]:
    """Split a printed pair list into ``(verbatim token, (a, b))`` items.

    Bracket characters are captured rather than matched, so a token such as
    ``{3, 3)`` still parses and can be flagged by the caller.
    """
    out = []
    for m in _PAIR_TOKEN.finditer(text):
        out.append((m.group(0), (int(m.group(2)), int(m.group(3)))))
    return tuple(out)


@dataclass(frozen=True)
class ReferenceData:
    table1: Mapping[int, tuple[int, ...]]
    table2: tuple[tuple[int, ...], ...]
    row_sums_7: tuple[int, ...]
    sequence_text: str
    pairs_text: str

    @property
    def sequence_printed(self) -> tuple[int, ...]:
        return parse_sequence_text(self.sequence_text)

    @property
    def pairs_printed(self) -> tuple[tuple[str, tuple[int, int]], ...]:
        return parse_pair_tokens(self.pairs_text)


REFERENCE = ReferenceData(
    table1=MappingProxyType(dict(_TABLE1)),
    table2=_TABLE2,
    row_sums_7=_ROW_SUMS_7,
    sequence_text=_SEQUENCE_TEXT,
    pairs_text=_PAIRS_TEXT,
)
