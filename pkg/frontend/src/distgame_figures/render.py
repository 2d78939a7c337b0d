"""Figure builders for the four supported kinds.

Everything plotted comes verbatim from the input CSVs: trajectory grids
draw the sampled series directly and contour kinds hand matplotlib the
raw field matrix (masked where unbounded), with no resampling or
smoothing in between.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import matplotlib
import numpy as np

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .readers import (  # noqa: E402
    FieldTable,
    InputError,
    mask_unbounded,
    read_field_csv,
    read_grid_sweep_csv,
)

KINDS = ("trajectory-grid", "compartment-contour", "utility-contour",
         "costfraction-contour")

#: Default level lines for the cost-fraction contour.
DEFAULT_COSTFRACTION_LEVELS = (0.001, 0.005, 0.01, 0.05, 0.1)

COMPARTMENT_COLORS = {"S": "blue", "I": "red", "R": "green"}


@dataclass(frozen=True)
class FigureSpec:
    inputs: tuple
    kind: str
    out: str
    levels: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "inputs", tuple(self.inputs))
        if self.kind not in KINDS:
            raise InputError(f"unknown figure kind {self.kind!r}; "
                             f"expected one of {', '.join(KINDS)}")
        if self.levels is not None:
            object.__setattr__(self, "levels", tuple(self.levels))
            if sorted(self.levels) != list(self.levels):
                raise InputError("contour levels must be increasing")
        n = len(self.inputs)
        if self.kind == "compartment-contour":
            if not 1 <= n <= 3:
                raise InputError(
                    f"{self.kind} takes 1-3 input CSVs, got {n}")
        elif n != 1:
            raise InputError(f"{self.kind} takes exactly 1 input CSV, got {n}")


def build_figure(spec: FigureSpec) -> plt.Figure:
    """Assemble the matplotlib figure without writing it (test hook)."""
    if spec.kind == "trajectory-grid":
        return _trajectory_grid(spec)
    if spec.kind == "compartment-contour":
        return _compartment_contour(spec)
    if spec.kind == "utility-contour":
        field = read_field_csv(spec.inputs[0])
        fig, ax = plt.subplots(figsize=(7, 5))
        _contour_panel(ax, field, spec.levels, mask=False)
        ax.set_title("marginal utility of distancing dI/d(delta)")
        fig.tight_layout()
        return fig
    field = read_field_csv(spec.inputs[0])
    fig, ax = plt.subplots(figsize=(7, 5))
    _contour_panel(ax, field,
                   spec.levels or DEFAULT_COSTFRACTION_LEVELS, mask=True)
    ax.set_title("break-even cost fraction phi = c_d / c_i")
    fig.tight_layout()
    return fig


def render(spec: FigureSpec) -> Path:
    """Render to ``spec.out``; the format follows the file extension
    (SVG by default)."""
    fig = build_figure(spec)
    out = Path(spec.out)
    if not out.suffix:
        out = out.with_suffix(".svg")
    try:
        fig.savefig(out)
    finally:
        plt.close(fig)
    return out


def _trajectory_grid(spec: FigureSpec) -> plt.Figure:
    cells = read_grid_sweep_csv(spec.inputs[0])
    r0s = sorted({c.r0 for c in cells})
    gammas = sorted({c.gamma_inv for c in cells})
    n_rows, n_cols = len(r0s), len(gammas)
    fig, axes = plt.subplots(n_rows, n_cols, squeeze=False, sharex=True,
                             figsize=(3.0 * n_cols, 2.2 * n_rows))
    for cell in cells:
        ax = axes[r0s.index(cell.r0)][gammas.index(cell.gamma_inv)]
        ax.plot(cell.t, cell.s, color=COMPARTMENT_COLORS["S"], label="S")
        ax.plot(cell.t, cell.i, color=COMPARTMENT_COLORS["I"], label="I")
        ax.plot(cell.t, cell.r, color=COMPARTMENT_COLORS["R"], label="R")
        ax.set_title(f"r0={cell.r0:g}, 1/gamma={cell.gamma_inv:g} d",
                     fontsize=8)
    for ax in axes[-1]:
        ax.set_xlabel("t (days)")
    for row in axes:
        row[0].set_ylabel("individuals")
    axes[0][0].legend(loc="center right", fontsize=7)
    fig.tight_layout()
    return fig


def _compartment_contour(spec: FigureSpec) -> plt.Figure:
    fields = [read_field_csv(p) for p in spec.inputs]
    names = ["S", "I", "R"][:len(fields)] if len(fields) == 3 else \
        [Path(p).stem for p in spec.inputs]
    fig, axes = plt.subplots(1, len(fields), squeeze=False,
                             figsize=(5.0 * len(fields), 4.2))
    for ax, field, name in zip(axes[0], fields, names):
        _contour_panel(ax, field, spec.levels, mask=False)
        ax.set_title(name)
    fig.tight_layout()
    return fig


def _contour_panel(ax, field: FieldTable, levels, mask: bool):
    """Draw one panel; returns exactly the data handed to matplotlib."""
    # Degenerate single-delta fields become a line plot over t.
    if field.single_column:
        row = field.values[0]
        keep = np.isfinite(row) if mask else np.ones(len(row), dtype=bool)
        ax.plot(field.times[keep], row[keep])
        ax.set_xlabel("t (days)")
        ax.set_ylabel(f"value at delta={field.deltas[0]:g}")
        return row[keep]
    values = mask_unbounded(field.values) if mask else field.values
    kwargs = {"levels": list(levels)} if levels else {}
    filled = ax.contourf(field.times, field.deltas, values, alpha=0.75,
                         cmap="viridis", **kwargs)
    lines = ax.contour(field.times, field.deltas, values,
                       colors="black", linewidths=0.6, **kwargs)
    ax.clabel(lines, fontsize=7, fmt="%g")
    ax.figure.colorbar(filled, ax=ax)
    ax.set_xlabel("t (days)")
    ax.set_ylabel("delta")
    return values
