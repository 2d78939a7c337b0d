"""Writers for the stable on-disk formats.

All floats are serialized with 9 significant digits in locale-independent
form; the unbounded cost-fraction sentinel becomes the token ``inf``.
Identical inputs always produce byte-identical files.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

from .sir import Trajectory
from .sweep import FieldResult, GridSpec

TRAJECTORY_HEADER = "t,S,I,R"
GRID_SWEEP_HEADER = "r0,gamma_inv,t,S,I,R"
STRATEGY_HEADER = "t,r_i,j_distance,j_not,preferred"


def fmt(x: float) -> str:
    """9-significant-digit decimal form; ``inf`` for the unbounded value."""
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return format(float(x), ".9g")


def trajectory_rows(trajectory: Trajectory) -> list[list[float]]:
    return [[float(t), float(s), float(i), float(r)]
            for t, s, i, r in zip(trajectory.t, trajectory.s,
                                  trajectory.i, trajectory.r)]


def write_trajectory_csv(trajectory: Trajectory, path) -> None:
    _write_csv(path, TRAJECTORY_HEADER, trajectory_rows(trajectory))


def field_header(field: FieldResult) -> str:
    return f"{field.axis1_name},{field.axis2_name},value"


def field_rows(field: FieldResult) -> list[list[float]]:
    rows = []
    for a, row in zip(field.axis1_values, field.values):
        for b, v in zip(field.axis2_values, row):
            rows.append([float(a), float(b), float(v)])
    return rows


def write_field_csv(field: FieldResult, path) -> None:
    _write_csv(path, field_header(field), field_rows(field))


def grid_sweep_rows(grid: GridSpec,
                    trajectories: list[Trajectory]) -> list[list[float]]:
    pairs = [(r0, g_inv) for r0 in grid.r0_values
             for g_inv in grid.gamma_inv_values]
    rows = []
    for (r0, g_inv), tr in zip(pairs, trajectories):
        for t, s, i, r in zip(tr.t, tr.s, tr.i, tr.r):
            rows.append([r0, g_inv, float(t), float(s), float(i), float(r)])
    return rows


def write_grid_sweep_csv(grid: GridSpec, trajectories: list[Trajectory],
                         path) -> None:
    _write_csv(path, GRID_SWEEP_HEADER, grid_sweep_rows(grid, trajectories))


def write_strategy_csv(rows, path) -> None:
    """Rows are ``(t, r_i, j_distance, j_not, StrategyChoice)`` tuples."""
    lines = [STRATEGY_HEADER]
    for t, r_i, j_d, j_not, choice in rows:
        lines.append(",".join([fmt(t), fmt(r_i), fmt(j_d), fmt(j_not),
                               choice.value]))
    _write_lines(path, lines)


def _write_csv(path, header: str, rows) -> None:
    lines = [header]
    for row in rows:
        lines.append(",".join(fmt(v) for v in row))
    _write_lines(path, lines)


def _write_lines(path, lines) -> None:
    Path(path).write_text("\n".join(lines) + "\n", encoding="ascii",
                          newline="\n")


def _json_value(x: float):
    # Strict JSON has no Infinity literal; fall back to the CSV token.
    return fmt(x) if math.isinf(x) else float(x)


def trajectory_json(trajectory: Trajectory) -> dict:
    return {"header": TRAJECTORY_HEADER.split(","),
            "rows": [[_json_value(v) for v in row]
                     for row in trajectory_rows(trajectory)]}


def field_json(field: FieldResult) -> dict:
    return {"header": field_header(field).split(","),
            "quantity": field.quantity,
            "rows": [[_json_value(v) for v in row]
                     for row in field_rows(field)]}


def grid_sweep_json(grid: GridSpec, trajectories: list[Trajectory]) -> dict:
    return {"header": GRID_SWEEP_HEADER.split(","),
            "rows": [[_json_value(v) for v in row]
                     for row in grid_sweep_rows(grid, trajectories)]}


def strategy_json(rows) -> dict:
    return {"header": STRATEGY_HEADER.split(","),
            "rows": [[_json_value(t), _json_value(r_i), _json_value(j_d),
                      _json_value(j_not), choice.value]
                     for t, r_i, j_d, j_not, choice in rows]}


def write_json(payload: dict, path) -> None:
    Path(path).write_text(json.dumps(payload, indent=2, sort_keys=True)
                          + "\n", encoding="ascii", newline="\n")
