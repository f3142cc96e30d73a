"""
Render probability- and fidelity-vs-time curves from sweep CSVs.

The input is the simulator CLI's CSV (header `t_ns,p_pp,...`); output is a
static PNG or SVG.  Several input files may be overlaid on one axis pair —
for example the no-error fidelity of a lab-frame run against a
rotating-frame run.  Rendering never mutates its inputs and is idempotent:
regenerating with the same inputs produces identical bytes.
"""
from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

# deterministic SVG ids for byte-identical regeneration
matplotlib.rcParams["svg.hashsalt"] = "stabplots"

#: columns holding probabilities or fidelities, plotted on a [0, 1] axis
UNIT_INTERVAL_PREFIXES = ("p_", "F_", "pt_", "F")

TIME_COLUMN = "t_ns"


class MissingColumnError(KeyError):
    """A requested column is absent from the CSV header."""

    def __init__(self, column: str, path, available):
        super().__init__(
            f"column {column!r} not found in {path} "
            f"(available: {', '.join(available)})"
        )
        self.column = column


class EmptyCsvError(ValueError):
    """The CSV has no data rows."""


@dataclass(frozen=True)
class PlotSpec:
    """One figure: the named columns of each input, over time."""

    inputs: tuple  # CSV paths, overlaid in order
    columns: tuple  # column names to plot from each input
    out: str  # output image path (.png or .svg)
    xlabel: str = "t (ns)"
    ylabel: str = ""
    title: str = ""

    def __post_init__(self):
        if not self.inputs:
            raise ValueError("at least one input CSV is required")
        if not self.columns:
            raise ValueError("at least one column is required")
        suffix = Path(self.out).suffix.lower()
        if suffix not in (".png", ".svg"):
            raise ValueError(f"unsupported image format {suffix!r}")


def load_csv(path) -> dict:
    """Read a sweep CSV into {column: float array}; header order is kept."""
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise EmptyCsvError(f"{path} has no header row")
        rows = [row for row in reader if row]
    if not rows:
        raise EmptyCsvError(f"{path} has a header but no data rows")
    data = np.array(rows, dtype=float)
    return {name: data[:, i] for i, name in enumerate(header)}


def _unit_interval(columns) -> bool:
    return all(c.startswith(UNIT_INTERVAL_PREFIXES) for c in columns)


def render(spec: PlotSpec) -> str:
    """Render the figure described by spec; returns the output path."""
    tables = []
    for path in spec.inputs:
        table = load_csv(path)
        if TIME_COLUMN not in table:
            raise MissingColumnError(TIME_COLUMN, path, tuple(table))
        for col in spec.columns:
            if col not in table:
                raise MissingColumnError(col, path, tuple(table))
        tables.append((path, table))

    fig, ax = plt.subplots(figsize=(6.4, 4.0), dpi=120)
    try:
        for path, table in tables:
            t = table[TIME_COLUMN]
            for col in spec.columns:
                label = col if len(tables) == 1 else f"{col} ({Path(path).stem})"
                ax.plot(t, table[col], linewidth=1.0, label=label)
        ax.set_xlabel(spec.xlabel)
        ax.set_ylabel(spec.ylabel or ", ".join(spec.columns))
        if spec.title:
            ax.set_title(spec.title)
        if _unit_interval(spec.columns):
            ax.set_ylim(-0.02, 1.02)
        ax.grid(True, alpha=0.3)
        if len(spec.columns) > 1 or len(tables) > 1:
            ax.legend(loc="best", fontsize=8)
        fig.tight_layout()
        fig.savefig(spec.out, metadata=_stable_metadata(spec.out))
    finally:
        plt.close(fig)
    return spec.out


def _stable_metadata(out: str) -> dict:
    """Suppress per-run metadata so regeneration is byte-identical."""
    if out.lower().endswith(".svg"):
        return {"Date": None}
    return {"Software": None}
