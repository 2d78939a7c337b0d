"""Deterministic grid evaluation producing 2-D scalar fields.

Each grid cell is an independent pure computation (one integrator run or
one finite-difference pair), so cells may be evaluated concurrently; the
results land in a preallocated row-major matrix indexed by grid
coordinates, making the output independent of scheduling.  The env var
``DISTGAME_THREADS`` caps the worker count (unset = serial, 0 = one per
CPU).
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .econ import _phi, sensitivity_curve
from .errors import ConfigError, DomainError, IntegrationError
from .sir import EpiParams, Scenario, Trajectory, integrate, with_delta

DEFAULT_R0_VALUES = (1.5, 2.5, 3.5, 4.5, 5.5, 6.5)
DEFAULT_GAMMA_INV_VALUES = (4.6, 6.55, 8.5, 10.45, 12.4)
#: 21-point distancing grid 0, 0.05, ..., 1.
DEFAULT_DELTA_VALUES = tuple(k / 20 for k in range(21))

FIELD_QUANTITIES = ("S", "I", "R", "marginal_utility", "cost_fraction")


@dataclass(frozen=True)
class GridSpec:
    """Axes for a sweep plus the scenario template shared by all cells.

    ``base_scenario`` supplies the population, seed fraction, time window
    and step sizes; the per-cell values of r0/gamma or delta override it.
    """

    r0_values: tuple
    gamma_inv_values: tuple
    delta_values: tuple
    base_scenario: Scenario

    def __post_init__(self):
        object.__setattr__(self, "r0_values", tuple(self.r0_values))
        object.__setattr__(self, "gamma_inv_values",
                           tuple(self.gamma_inv_values))
        object.__setattr__(self, "delta_values", tuple(self.delta_values))
        _check_axis("r0_values", self.r0_values, lo=0.0, lo_open=True)
        _check_axis("gamma_inv_values", self.gamma_inv_values,
                    lo=0.0, lo_open=True)
        _check_axis("delta_values", self.delta_values, lo=0.0, hi=1.0)

    @classmethod
    def default(cls, base_scenario: Scenario) -> "GridSpec":
        return cls(r0_values=DEFAULT_R0_VALUES,
                   gamma_inv_values=DEFAULT_GAMMA_INV_VALUES,
                   delta_values=DEFAULT_DELTA_VALUES,
                   base_scenario=base_scenario)


def _check_axis(name: str, values: Sequence[float], lo: float,
                hi: float | None = None, lo_open: bool = False) -> None:
    if len(values) == 0:
        raise DomainError(f"{name} must be non-empty")
    for v in values:
        if (v <= lo if lo_open else v < lo) or (hi is not None and v > hi):
            raise DomainError(f"{name} contains out-of-range value {v}")
    for a, b in zip(values, values[1:]):
        if not a < b:
            raise DomainError(f"{name} must be strictly increasing")


@dataclass(frozen=True)
class FieldResult:
    """A 2-D scalar field over two labelled axes, row-major in axis1."""

    axis1_name: str
    axis2_name: str
    axis1_values: np.ndarray
    axis2_values: np.ndarray
    values: np.ndarray
    quantity: str

    def __post_init__(self):
        if self.quantity not in FIELD_QUANTITIES:
            raise DomainError(
                f"quantity must be one of {FIELD_QUANTITIES}, "
                f"got {self.quantity!r}")
        if self.values.shape != (len(self.axis1_values),
                                 len(self.axis2_values)):
            raise DomainError(
                f"values shape {self.values.shape} does not match axes "
                f"({len(self.axis1_values)}, {len(self.axis2_values)})")
        for arr in (self.axis1_values, self.axis2_values, self.values):
            arr.setflags(write=False)


def _worker_count() -> int:
    raw = os.environ.get("DISTGAME_THREADS")
    if raw is None:
        return 1
    try:
        k = int(raw)
    except ValueError:
        raise ConfigError(
            f"DISTGAME_THREADS must be an integer, got {raw!r}") from None
    if k < 0:
        raise ConfigError(f"DISTGAME_THREADS must be >= 0, got {k}")
    return k if k > 0 else (os.cpu_count() or 1)


def _map_cells(fn, items):
    # Order-preserving map; pool size is only a throughput knob, results
    # are positional so the output cannot depend on scheduling.
    workers = _worker_count()
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _integrate_cell(scenario: Scenario, coords: str) -> Trajectory:
    try:
        return integrate(scenario)
    except IntegrationError as e:
        raise IntegrationError(f"grid cell ({coords}): {e}",
                               t=e.t, compartment=e.compartment) from e


def sweep_r0_gamma(grid: GridSpec) -> list[Trajectory]:
    """Baseline (delta = 0) trajectories for every (r0, gamma_inv) pair.

    Returned row-major: the trajectory for ``(r0_values[a],
    gamma_inv_values[b])`` sits at index ``a * len(gamma_inv_values) + b``.
    """
    base = grid.base_scenario

    def cell(pair):
        r0, g_inv = pair
        params = EpiParams(r0=r0, gamma=1.0 / g_inv, n=base.params.n)
        sc = Scenario(params=params, i0_fraction=base.i0_fraction,
                      delta=0.0, t0=base.t0, tf=base.tf,
                      dt_internal=base.dt_internal,
                      dt_output=base.dt_output)
        return _integrate_cell(sc, f"r0={r0}, gamma_inv={g_inv}")

    pairs = [(r0, g_inv) for r0 in grid.r0_values
             for g_inv in grid.gamma_inv_values]
    return _map_cells(cell, pairs)


def _delta_column_trajectories(grid: GridSpec) -> list[Trajectory]:
    def cell(delta):
        return _integrate_cell(with_delta(grid.base_scenario, delta),
                               f"delta={delta}")

    return _map_cells(cell, list(grid.delta_values))


def field_by_delta(grid: GridSpec, quantity: str) -> FieldResult:
    """Compartment size over a (delta, t) grid.

    ``quantity`` selects S, I or R; the (r0, gamma) pair comes from the
    grid's base scenario and each delta column is its own integration.
    """
    if quantity not in ("S", "I", "R"):
        raise DomainError(
            f"quantity must be one of ('S', 'I', 'R'), got {quantity!r}")
    trajectories = _delta_column_trajectories(grid)
    attr = quantity.lower()
    values = np.vstack([getattr(tr, attr) for tr in trajectories])
    return _field(grid, values, quantity)


def utility_field(grid: GridSpec, h: float = 0.01) -> FieldResult:
    """Marginal utility of distancing dI/d(delta) over a (delta, t) grid."""
    def cell(delta):
        return sensitivity_curve(with_delta(grid.base_scenario, delta), h)

    values = np.vstack(_map_cells(cell, list(grid.delta_values)))
    return _field(grid, values, "marginal_utility")


def cost_fraction_field(grid: GridSpec) -> FieldResult:
    """Break-even cost fraction phi over a (delta, t) grid.

    Each delta column evaluates phi along that column's own trajectory;
    the delta = 0 column is the UNBOUNDED sentinel (serialized as
    ``inf``).
    """
    base = grid.base_scenario
    p = base.params
    trajectories = _delta_column_trajectories(grid)
    rows = []
    for delta, tr in zip(grid.delta_values, trajectories):
        if delta == 0.0:
            rows.append(np.full(len(tr), np.inf))
        else:
            rows.append(_phi(tr.s, tr.i, delta, p.beta, p.n))
    return _field(grid, np.vstack(rows), "cost_fraction")


def _field(grid: GridSpec, values: np.ndarray, quantity: str) -> FieldResult:
    return FieldResult(
        axis1_name="delta", axis2_name="t",
        axis1_values=np.asarray(grid.delta_values, dtype=float),
        axis2_values=np.asarray(grid.base_scenario.output_times()),
        values=values, quantity=quantity)
