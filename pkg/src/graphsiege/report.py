"""Plot-ready CSV output.

Floats are written with 6 significant digits, infinities as ``inf`` and
missing values as empty fields, so identical inputs give identical bytes.
"""
from __future__ import annotations

import csv
import io
import math
from typing import Iterable, Sequence, TextIO


def format_cell(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, float):
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        if math.isnan(x):
            return "nan"
        return format(x, ".6g")
    if hasattr(x, "item"):  # numpy scalar
        return format_cell(x.item())
    return str(x)


def write_csv(fh: TextIO, header: Sequence[str], rows: Iterable[Sequence]) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([format_cell(x) for x in row])


def csv_text(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    write_csv(buf, header, rows)
    return buf.getvalue()
