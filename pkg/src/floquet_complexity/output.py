"""Plot-ready CSV emission.

Every file is UTF-8 text: a block of '#'-prefixed key = value lines holding
the full run configuration (sorted by key, so identical configs give
byte-identical files), one column-name line, then data rows.  Floats are
written in scientific notation with 17 significant digits; optional summary
lines (again '#'-prefixed) may follow the data.
"""

from __future__ import annotations

import enum
import math
import sys
from typing import Iterable, Mapping, Sequence

__all__ = ["format_cell", "write_table"]


def format_cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, enum.Enum):
        return value.name
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        return f"{value:.16e}"
    if isinstance(value, int):
        return str(value)
    if value is None:
        return ""
    return str(value)


def _header_lines(block: Mapping[str, object]):
    for key in sorted(block):
        yield f"# {key} = {format_cell(block[key])}\n"


def write_table(
    path: str | None,
    header: Mapping[str, object],
    columns: Sequence[str],
    rows: Iterable[Sequence],
    footer: Mapping[str, object] | None = None,
) -> None:
    """Write one CSV table; path None sends it to stdout."""

    def emit(handle):
        handle.writelines(_header_lines(header))
        handle.write(",".join(columns) + "\n")
        for row in rows:
            handle.write(",".join(format_cell(cell) for cell in row) + "\n")
        if footer:
            handle.writelines(_header_lines(footer))

    if path is None:
        emit(sys.stdout)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as handle:
            emit(handle)
