"""Text, CSV and JSON renderings of a SkyTable, and their parsers."""

from __future__ import annotations

import csv
import io
import json

from .skyscraper import SkyTable

__all__ = ["FORMATS", "format_table", "parse_table"]

FORMATS = ("text", "csv", "json")


def format_table(table: SkyTable, fmt: str = "text") -> str:
    n = table.n
    if fmt == "json":
        return json.dumps({"n": n, "entries": table.rows()}) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["a\\b", *range(1, n + 1)])
        for a, row in enumerate(table.entries, start=1):
            w.writerow([a, *row])
        return buf.getvalue()
    if fmt == "text":
        width = max(len(str(v)) for row in table.entries for v in row)
        width = max(width, len(str(n)))
        head = "a\\b".rjust(4) + " " + " ".join(str(b).rjust(width) for b in range(1, n + 1))
        lines = [head]
        for a, row in enumerate(table.entries, start=1):
            lines.append(str(a).rjust(4) + " " + " ".join(str(v).rjust(width) for v in row))
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown table format {fmt!r}; expected one of {FORMATS}")


def parse_table(text: str, fmt: str = "text") -> SkyTable:
    if fmt == "json":
        obj = json.loads(text)
        entries = tuple(tuple(int(v) for v in row) for row in obj["entries"])
        n = int(obj["n"])
    elif fmt in ("csv", "text"):
        if fmt == "csv":
            rows = list(csv.reader(io.StringIO(text)))
        else:
            rows = [line.split() for line in text.splitlines() if line.strip()]
        n = len(rows[0]) - 1
        entries = tuple(tuple(int(v) for v in row[1:]) for row in rows[1:])
    else:
        raise ValueError(f"unknown table format {fmt!r}; expected one of {FORMATS}")
    if len(entries) != n or any(len(r) != n for r in entries):
        raise ValueError(f"table is not {n}x{n}")
    return SkyTable(n, entries)
