"""Static-figure rendering for stabcell sweep CSVs."""
from .render import (
    EmptyCsvError,
    MissingColumnError,
    PlotSpec,
    load_csv,
    render,
)

__version__ = "1.0.0"

__all__ = [
    "EmptyCsvError",
    "MissingColumnError",
    "PlotSpec",
    "load_csv",
    "render",
]
