"""Result tables and their CSV form.

Floats are written with 9 significant digits (``format(x, '.9g')``), so
reading a file back recovers every value exactly at that precision.
Provenance lines follow the data, each prefixed with ``#``.
"""
from __future__ import annotations

import csv
import io
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path

__all__ = ["ResultTable", "format_cell", "emit_csv", "read_csv"]


def format_cell(value):
    """Text form of one cell: ``.9g`` floats, ``inf`` for an open edge, '' for None."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if math.isinf(value) and value > 0:
            return "inf"
        return format(value, ".9g")
    return str(value)


@dataclass
class ResultTable:
    """Header, rows and provenance of one run.

    ``open_columns`` names the columns allowed to hold ``+inf`` (outer radii
    of unbounded shells); every other float cell must be finite.
    """

    header: list
    rows: list = field(default_factory=list)
    provenance: list = field(default_factory=list)
    open_columns: tuple = ("r_outer",)

    def add(self, *cells):
        if len(cells) != len(self.header):
            raise ValueError(f"row has {len(cells)} cells, header has {len(self.header)}")
        for name, cell in zip(self.header, cells):
            if isinstance(cell, float) and not math.isfinite(cell):
                if not (name in self.open_columns and cell == math.inf):
                    raise ValueError(f"column {name!r} got non-finite value {cell}")
        self.rows.append(list(cells))

    def column(self, name):
        i = self.header.index(name)
        return [row[i] for row in self.rows]

    def __len__(self):
        return len(self.rows)


def emit_csv(table: ResultTable, path="-"):
    """Write ``table`` as CSV to ``path`` (``'-'`` for standard output).

    Raises
    ------
    OSError
        When the destination cannot be written.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(table.header)
    for row in table.rows:
        writer.writerow([format_cell(c) for c in row])
    for line in table.provenance:
        buffer.write(f"# {line}\n")
    text = buffer.getvalue()
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")
    return text


def read_csv(source):
    """Parse emitted CSV text (or a path) into ``(header, rows, provenance)``."""
    text = source if "\n" in str(source) else Path(source).read_text(encoding="utf-8")
    data = [line for line in text.splitlines() if not line.startswith("#")]
    provenance = [line[2:] for line in text.splitlines() if line.startswith("# ")]
    rows = list(csv.reader(data))
    return rows[0], rows[1:], provenance
