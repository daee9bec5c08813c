"""
Export utilities for orbit runs (CSV, JSON, plot CSV).
Rationals are always written as exact `p/q` strings.
"""

import csv
import io
import json
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from typing import Optional

from quivermaps.config import get_export_config
from quivermaps.numeric.scalar import format_scalar
from quivermaps.schema import OrbitRun

LOG_PRECISION = 60


def _coord_names(arity: int) -> list[str]:
    return [f"x{i}" for i in range(1, arity + 1)]


def orbit_rows(run: OrbitRun) -> list[dict]:
    """One dict per record: n, coordinates, sheet, J1, J2."""
    rows = []
    for record in run.records:
        row = {"n": record.n}
        for name, value in zip(_coord_names(record.point.arity), record.point.coords):
            row[name] = format_scalar(value)
        row["sheet"] = record.sheet
        row["J1"] = format_scalar(record.integrals.j1)
        row["J2"] = format_scalar(record.integrals.j2)
        rows.append(row)
    return rows


def _write_csv(header: list[str], rows: list[list]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _cell(value) -> str:
    return "" if value is None else str(value)


def create_csv_text(run: OrbitRun) -> str:
    rows = orbit_rows(run)
    arity = run.records[0].point.arity
    header = ["n", *_coord_names(arity), "sheet", "J1", "J2"]
    return _write_csv(header, [[_cell(row[col]) for col in header] for row in rows])


def create_json_text(run: OrbitRun) -> str:
    return json.dumps(orbit_rows(run), indent=2) + "\n"


def log10_text(value: Fraction, digits: Optional[int] = None) -> str:
    """log10 of a positive rational, rounded half-even to `digits` decimals."""
    digits = get_export_config()["log_digits"] if digits is None else digits
    value = Fraction(value)
    if value <= 0:
        raise ValueError(f"log10 needs a positive value, got {value}")
    with localcontext() as ctx:
        ctx.prec = LOG_PRECISION
        result = Decimal(value.numerator).log10() - Decimal(value.denominator).log10()
        quantum = Decimal(1).scaleb(-digits)
        return format(result.quantize(quantum, rounding=ROUND_HALF_EVEN), "f")


def create_plot_csv_text(run: OrbitRun, digits: Optional[int] = None) -> str:
    """n, log10 of each coordinate, sheet index, then the exact coordinates."""
    arity = run.records[0].point.arity
    names = _coord_names(arity)
    header = ["n", *[f"log10_{name}" for name in names], "sheet", *names]
    rows = []
    for record in run.records:
        coords = record.point.coords
        rows.append(
            [
                str(record.n),
                *[log10_text(c, digits) for c in coords],
                _cell(record.sheet),
                *[format_scalar(c) for c in coords],
            ]
        )
    return _write_csv(header, rows)
