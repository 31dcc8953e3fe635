"""Text, JSON and CSV renderings of computation results.

CSV schema for Betti tables: ``n,t_n,top,rad,w`` (empty cell for unknown).
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

BETTI_COLUMNS = ("n", "t_n", "top", "rad", "w")


def _plain(obj):
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _plain(obj.tolist())
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    if isinstance(obj, Fraction):
        return int(obj) if obj.denominator == 1 else str(obj)
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    return obj


def to_json(obj) -> str:
    return json.dumps(_plain(obj), sort_keys=True, indent=2) + "\n"


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def to_csv(rows: Iterable[dict], columns: Sequence[str]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row.get(c)) for c in columns])
    return buf.getvalue()


def to_table(rows: Sequence[dict], columns: Sequence[str]) -> str:
    cells = [[str(c) for c in columns]] + [[_cell(r.get(c)) or "-" for c in columns] for r in rows]
    widths = [max(len(line[i]) for line in cells) for i in range(len(columns))]
    return "".join(
        "  ".join(cell.rjust(w) for cell, w in zip(line, widths)).rstrip() + "\n" for line in cells
    )


def to_keyvalue(d: dict) -> str:
    width = max((len(str(k)) for k in d), default=0)
    out = []
    for k, v in d.items():
        v = _plain(v)
        out.append(f"{str(k).ljust(width)}  {json.dumps(v) if isinstance(v, (list, dict)) else v}\n")
    return "".join(out)


def betti_csv(report) -> str:
    return to_csv(report.rows(), BETTI_COLUMNS)


def betti_text(report) -> str:
    head = (f"module {report.module}  Hilbert type {tuple(report.hilbert_type)}  p = {report.p}"
            f"  N = {report.N}{'  (truncated by dim cap)' if report.truncated else ''}\n")
    return head + to_table(report.rows(), BETTI_COLUMNS)


def sweep_csv(points: Sequence[tuple]) -> str:
    return to_csv(({"a": a, "rho": r} for a, r in points), ("a", "rho"))


def theorem3_csv(points: Sequence[tuple]) -> str:
    return to_csv(({"a": a, "small": c, "big": d} for a, c, d in points), ("a", "small", "big"))
