"""Text, CSV and JSON serialisation.

Rationals are written as "p/q" (plain "p" when integral), floats as their
shortest round-trip repr, so every export reads back to identical values.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
import tempfile
from dataclasses import asdict, fields
from fractions import Fraction

from .divisors import DivisorSet
from .spectral import HomotopyTrack, ScanRecord

SCAN_FIELDS = [f.name for f in fields(ScanRecord)]


def fmt_number(x) -> str:
    if isinstance(x, float):
        return repr(x)
    return str(x)


def _json_value(x):
    if isinstance(x, Fraction):
        return str(x)
    return x


def _matrix_entries(A) -> list[list]:
    return A.tolist()


def format_matrix(A, S: DivisorSet, fmt: str = "text", name: str = "") -> str:
    entries = _matrix_entries(A)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        for row in entries:
            w.writerow([fmt_number(x) for x in row])
        return buf.getvalue()
    if fmt == "json":
        doc = {
            "name": name,
            "n": S.n,
            "s": S.s,
            "divisors": list(S.elements),
            "entries": [[_json_value(x) for x in row] for row in entries],
        }
        return json.dumps(doc) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    labels = [str(k) for k in S.elements]
    cells = [[fmt_number(x) for x in row] for row in entries]
    width = max([len(c) for row in cells for c in row] + [len(x) for x in labels])
    lw = max(len(x) for x in labels + [name])
    lines = [name.ljust(lw) + " | " + " ".join(x.rjust(width) for x in labels)]
    lines.append("-" * len(lines[0]))
    for label, row in zip(labels, cells):
        lines.append(label.rjust(lw) + " | " + " ".join(c.rjust(width) for c in row))
    return "\n".join(lines) + "\n"


def scan_to_csv(records: list[ScanRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SCAN_FIELDS)
    for r in records:
        w.writerow([fmt_number(getattr(r, f)) for f in SCAN_FIELDS])
    return buf.getvalue()


def scan_from_csv(text: str) -> list[ScanRecord]:
    rows = csv.DictReader(io.StringIO(text))
    if rows.fieldnames != SCAN_FIELDS:
        raise ValueError(f"unexpected scan header {rows.fieldnames}")
    return [
        ScanRecord(
            n=int(d["n"]),
            metric=d["metric"],
            value=float(d["value"]),
            normalizer=float(d["normalizer"]),
            ratio=float(d["ratio"]),
            error=d["error"],
        )
        for d in rows
    ]


def scan_to_wide_csv(records: list[ScanRecord], metrics: list[str]) -> str:
    """One row per n, one column per metric holding its ratio (plot-ready)."""
    by_n: dict[int, dict[str, float]] = {}
    for r in records:
        by_n.setdefault(r.n, {})[r.metric] = r.ratio
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n"] + list(metrics))
    for n in sorted(by_n):
        w.writerow([n] + [fmt_number(by_n[n].get(m, math.nan)) for m in metrics])
    return buf.getvalue()


def scan_to_json(records: list[ScanRecord]) -> str:
    return json.dumps([asdict(r) for r in records]) + "\n"


def scan_from_json(text: str) -> list[ScanRecord]:
    return [ScanRecord(**d) for d in json.loads(text)]


def homotopy_to_csv(track: HomotopyTrack) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(
        ["step", "t", "positive", "negative", "min_abs_eigenvalue", "flagged"]
        + [f"lambda_{i}" for i in range(1, track.s + 1)]
    )
    for x in track.snapshots:
        w.writerow(
            [x.step, repr(x.t), x.positive_count, x.negative_count, repr(x.min_abs_eigenvalue), int(x.flagged)]
            + [repr(v) for v in x.eigenvalues]
        )
    return buf.getvalue()


def homotopy_to_json(track: HomotopyTrack) -> str:
    doc = {
        "n": track.n,
        "s": track.s,
        "floor": track.floor,
        "signature_constant": track.signature_constant,
        "flagged_steps": track.flagged_steps,
        "snapshots": [asdict(x) for x in track.snapshots],
    }
    return json.dumps(doc) + "\n"


def atomic_write(path: str, text: str) -> None:
    """Write text to path via a temporary file, so a failure leaves no partial file."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
