"""Plotting front end for distgame CSV outputs."""

__version__ = "0.1.0"

from .readers import (
    FieldTable,
    InputError,
    SchemaError,
    TrajectoryCell,
    mask_unbounded,
    read_field_csv,
    read_grid_sweep_csv,
)
from .render import (
    DEFAULT_COSTFRACTION_LEVELS,
    KINDS,
    FigureSpec,
    build_figure,
    render,
)

__all__ = [
    "__version__",
    "FieldTable", "TrajectoryCell", "read_field_csv", "read_grid_sweep_csv",
    "mask_unbounded", "SchemaError", "InputError",
    "FigureSpec", "KINDS", "DEFAULT_COSTFRACTION_LEVELS",
    "build_figure", "render",
]
