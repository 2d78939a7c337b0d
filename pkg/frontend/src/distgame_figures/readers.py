"""Strict readers for the simulator's CSV outputs.

Headers must match the producing tool exactly; mismatches raise
SchemaError naming the missing/extra columns.  Values are parsed
verbatim (``inf`` included) and never resampled.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np

FIELD_HEADER = ["delta", "t", "value"]
GRID_SWEEP_HEADER = ["r0", "gamma_inv", "t", "S", "I", "R"]


class SchemaError(Exception):
    """Input CSV does not match the expected schema."""


class InputError(Exception):
    """Input CSV is unreadable or structurally broken."""


def _check_header(got: list[str], expected: list[str], path) -> None:
    if got == expected:
        return
    missing = [c for c in expected if c not in got]
    extra = [c for c in got if c not in expected]
    parts = [f"{path}: header mismatch"]
    if missing:
        parts.append(f"missing column(s): {', '.join(missing)}")
    if extra:
        parts.append(f"unexpected column(s): {', '.join(extra)}")
    if not missing and not extra:
        parts.append(f"column order must be {','.join(expected)}")
    raise SchemaError("; ".join(parts))


def _read_rows(path, expected_header: list[str]) -> list[list[str]]:
    try:
        with open(path, newline="") as fh:
            reader = csv.reader(fh)
            try:
                header = next(reader)
            except StopIteration:
                raise InputError(f"{path}: file is empty") from None
            _check_header(header, expected_header, path)
            return [row for row in reader if row]
    except OSError as e:
        raise InputError(f"cannot read {path}: {e}") from e


def _parse_floats(row: list[str], path, width: int) -> list[float]:
    if len(row) != width:
        raise InputError(f"{path}: expected {width} columns, got {len(row)}")
    try:
        return [float(v) for v in row]
    except ValueError as e:
        raise InputError(f"{path}: non-numeric cell in row {row}: {e}") from e


@dataclass(frozen=True)
class FieldTable:
    """A (delta, t) field in file order; ``values[i, j]`` belongs to
    ``deltas[i]``, ``times[j]``."""

    deltas: np.ndarray
    times: np.ndarray
    values: np.ndarray
    source: str

    @property
    def single_column(self) -> bool:
        return len(self.deltas) == 1


def read_field_csv(path) -> FieldTable:
    rows = [_parse_floats(r, path, 3) for r in _read_rows(path, FIELD_HEADER)]
    if not rows:
        raise InputError(f"{path}: no data rows")
    deltas: list[float] = []
    times: list[float] = []
    for d, t, _ in rows:
        if d not in deltas:
            deltas.append(d)
        if t not in times:
            times.append(t)
    values = np.full((len(deltas), len(times)), np.nan)
    for d, t, v in rows:
        values[deltas.index(d), times.index(t)] = v
    if np.isnan(values).any():
        raise InputError(f"{path}: field is not a full delta x t grid")
    return FieldTable(deltas=np.asarray(deltas), times=np.asarray(times),
                      values=values, source=str(path))


@dataclass(frozen=True)
class TrajectoryCell:
    r0: float
    gamma_inv: float
    t: np.ndarray
    s: np.ndarray
    i: np.ndarray
    r: np.ndarray


def read_grid_sweep_csv(path) -> list[TrajectoryCell]:
    rows = [_parse_floats(r, path, 6)
            for r in _read_rows(path, GRID_SWEEP_HEADER)]
    if not rows:
        raise InputError(f"{path}: no data rows")
    cells: list[TrajectoryCell] = []
    bucket: list[list[float]] = []
    key = (rows[0][0], rows[0][1])
    for row in rows + [[None] * 6]:      # sentinel flushes the last cell
        row_key = (row[0], row[1])
        if row_key != key:
            block = np.asarray(bucket)
            cells.append(TrajectoryCell(
                r0=key[0], gamma_inv=key[1], t=block[:, 2],
                s=block[:, 3], i=block[:, 4], r=block[:, 5]))
            bucket, key = [], row_key
        bucket.append(row)
    return cells


def mask_unbounded(values: np.ndarray) -> np.ma.MaskedArray:
    """Mask non-finite cells (the ``inf`` sentinel column) for plotting."""
    return np.ma.masked_invalid(values)
