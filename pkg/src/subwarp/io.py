"""
subwarp.io
~~~~~~~~~~

Readers for plain-text series files.

* ``csv``: one series per column, optionally with a header row of names.
* ``ucr-tsv``: one series per row, tab separated, first field is the class
  label (kept as the series name). Trailing ``NaN`` fields are treated as
  padding of variable-length rows and dropped.

Errors point at the offending cell as 1-based ``(row, column)``.
"""
from __future__ import annotations

import csv
import math
from typing import List

from .series import InputError, Series

FORMATS = ("csv", "ucr-tsv")


def _read_rows(source, delimiter: str) -> List[List[str]]:
    try:
        if hasattr(source, "read"):
            rows = list(csv.reader(source, delimiter=delimiter))
        else:
            with open(source, newline="", encoding="utf-8") as fh:
                rows = list(csv.reader(fh, delimiter=delimiter))
    except (OSError, UnicodeDecodeError, csv.Error) as exc:
        raise InputError(f"cannot read {source}: {exc}") from exc
    # blank lines carry no data
    return [[cell.strip() for cell in row] for row in rows if any(cell.strip() for cell in row)]


def _number(cell: str, row: int, col: int) -> float:
    try:
        return float(cell)
    except ValueError:
        raise InputError(f"non-numeric cell {cell!r} at (row {row}, column {col})") from None


def _is_number(cell: str) -> bool:
    try:
        float(cell)
    except ValueError:
        return False
    return True


def read_csv(path) -> List[Series]:
    rows = _read_rows(path, ",")
    if not rows:
        raise InputError(f"{path} contains no data")
    width = len(rows[0])
    names = [f"column{c}" for c in range(1, width + 1)]
    first = 0
    if not all(_is_number(cell) for cell in rows[0]):
        names = [cell or f"column{c}" for c, cell in enumerate(rows[0], start=1)]
        first = 1
    if first >= len(rows):
        raise InputError(f"{path} has a header but no data rows")
    columns: List[List[float]] = [[] for _ in range(width)]
    for r in range(first, len(rows)):
        row = rows[r]
        if len(row) != width:
            raise InputError(f"ragged row: row {r + 1} has {len(row)} columns, expected {width} "
                             f"(row {r + 1}, column {min(len(row), width) + 1})")
        for c, cell in enumerate(row):
            columns[c].append(_number(cell, r + 1, c + 1))
    out = []
    for c, (name, col) in enumerate(zip(names, columns), start=1):
        bad = next((k for k, v in enumerate(col) if not math.isfinite(v)), None)
        if bad is not None:
            raise InputError(f"non-finite value at (row {first + bad + 1}, column {c})")
        out.append(Series(col, name))
    return out


def read_ucr_tsv(path) -> List[Series]:
    rows = _read_rows(path, "\t")
    if not rows:
        raise InputError(f"{path} contains no data")
    out = []
    for r, row in enumerate(rows, start=1):
        if len(row) < 2:
            raise InputError(f"row {r} has a label but no values (row {r}, column 2)")
        values = [_number(cell, r, c) for c, cell in enumerate(row[1:], start=2)]
        while values and math.isnan(values[-1]):
            values.pop()
        if not values:
            raise InputError(f"row {r} holds only padding (row {r}, column 2)")
        for c, v in enumerate(values, start=2):
            if not math.isfinite(v):
                raise InputError(f"non-finite value at (row {r}, column {c})")
        out.append(Series(values, row[0]))
    return out


def ingest(path, format: str = "csv") -> List[Series]:
    """Read all series from ``path`` (a file name or an open text file).

    >>> import tempfile, os
    >>> fd, name = tempfile.mkstemp(suffix=".tsv")
    >>> _ = os.write(fd, b"1\\t0.1\\t0.2\\t0.3\\n"); os.close(fd)
    >>> s = ingest(name, "ucr-tsv")[0]
    >>> s.name, s.values.tolist()
    ('1', [0.1, 0.2, 0.3])
    >>> os.remove(name)
    """
    if format == "csv":
        return read_csv(path)
    if format == "ucr-tsv":
        return read_ucr_tsv(path)
    raise InputError(f"format must be one of {FORMATS}, got {format!r}")
