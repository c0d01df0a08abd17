"""CSV and ``name=value`` rendering of sweep results."""

from __future__ import annotations

import csv
from typing import TextIO

from .ground import SweepSeries

SIG_DIGITS = 12


def fmt(x: float) -> str:
    """Render with 12 significant digits, '.' decimal point, no grouping."""
    s = f"{float(x):.{SIG_DIGITS}g}"
    return "0" if s == "-0" else s


def write_ground_csv(series: SweepSeries, fh: TextIO) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow([series.parameter_name, *series.columns])
    for p, vals in series.records:
        w.writerow([fmt(p), *(fmt(vals[k]) for k in series.columns)])


def write_thermal_csv(sweeps: dict[float, SweepSeries], fh: TextIO) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["t", "c", "negativity"])
    for t, series in sweeps.items():
        for c, vals in series.records:
            w.writerow([fmt(t), fmt(c), fmt(vals["negativity"])])


def write_values(values: dict[str, object], fh: TextIO) -> None:
    for name, v in values.items():
        text = fmt(v) if isinstance(v, float) else str(v)
        fh.write(f"{name}={text}\n")
