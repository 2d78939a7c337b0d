"""Economic layer of the distancing game.

Per-capita step costs compare the fixed cost of distancing ``c_d``
against the risk-weighted cost of illness ``r_i * c_i``, where the
infection risk is ``r_i = beta * S * I / n**2``.  On top of that sit the
population-level social cost, its discrete-time total, the break-even
cost fraction ``phi = (1 - delta) / delta * r_i``, and the marginal
utility of distancing ``dI/d(delta)`` obtained by finite differences of
two integrator runs.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, GridError
from .sir import CompartmentState, EpiParams, Scenario, Trajectory, integrate, with_delta

#: Sentinel returned by `cost_fraction` at delta = 0, where any finite
#: distancing cost is dominated.  Serializes to the CSV token ``inf``.
UNBOUNDED = math.inf

# Relative tolerance below which the two step costs count as a tie.
STRATEGY_TIE_TOL = 1e-12

DEFAULT_FD_STEP = 0.01
MAX_FD_STEP = 0.05


@dataclass(frozen=True)
class CostParams:
    """Per-person costs per day: ``c_d`` while distancing, ``c_i`` while ill."""

    c_d: float
    c_i: float

    def __post_init__(self):
        if self.c_d < 0 or self.c_i < 0:
            raise DomainError(
                f"costs must be non-negative, got c_d={self.c_d}, "
                f"c_i={self.c_i}")


class StrategyChoice(enum.Enum):
    DISTANCE = "distance"
    NOT_DISTANCE = "not_distance"
    INDIFFERENT = "indifferent"


@dataclass(frozen=True)
class RiskPoint:
    """Infection risk at one sample time."""

    t: float
    risk: float

    def __post_init__(self):
        if self.risk < 0:
            raise DomainError(f"risk must be non-negative, got {self.risk}")


def _risk(s, i, beta: float, n: float):
    # Shared by the scalar and vectorized paths so grid cells match
    # single evaluations bit for bit.
    return beta * s * i / (n * n)


def _phi(s, i, delta: float, beta: float, n: float):
    return (1.0 - delta) * beta * s * i / (delta * n * n)


def infection_risk(state: CompartmentState, params: EpiParams) -> float:
    """Per-capita likelihood of infection per day for a non-distancing
    susceptible: ``beta * S * I / n**2``."""
    return _risk(state.s, state.i, params.beta, params.n)


def risk_series(trajectory: Trajectory) -> list[RiskPoint]:
    """Infection risk at every output sample of a trajectory."""
    p = trajectory.scenario.params
    risk = _risk(trajectory.s, trajectory.i, p.beta, p.n)
    return [RiskPoint(t=float(t), risk=float(v))
            for t, v in zip(trajectory.t, risk)]


def step_costs(state: CompartmentState, params: EpiParams,
               costs: CostParams) -> tuple[float, float]:
    """Per-person cost per day of each strategy.

    Returns ``(j_distance, j_not)``: the distancing side pays the flat
    ``c_d``, the other side pays the risk-weighted illness cost.
    """
    return costs.c_d, infection_risk(state, params) * costs.c_i


def preferred_strategy(state: CompartmentState, params: EpiParams,
                       costs: CostParams) -> StrategyChoice:
    """Cheaper of the two instantaneous strategies, with ties (relative
    difference below 1e-12) reported as INDIFFERENT."""
    j_d, j_not = step_costs(state, params, costs)
    if math.isclose(j_d, j_not, rel_tol=STRATEGY_TIE_TOL, abs_tol=0.0):
        return StrategyChoice.INDIFFERENT
    if j_d < j_not:
        return StrategyChoice.DISTANCE
    return StrategyChoice.NOT_DISTANCE


def social_cost_at(state: CompartmentState, delta: float, params: EpiParams,
                   costs: CostParams) -> float:
    """Population-wide cost rate ``n * (delta*c_d + (1-delta)*r_i*c_i)``."""
    if not 0.0 <= delta <= 1.0:
        raise DomainError(f"delta must be in [0, 1], got {delta}")
    r = infection_risk(state, params)
    return params.n * (delta * costs.c_d + (1.0 - delta) * r * costs.c_i)


def total_social_cost(trajectory: Trajectory, costs: CostParams,
                      dt_cost: float = 1.0) -> float:
    """Discrete-time total of the social cost rate over the run.

    Left-rectangle sum on the grid ``t0, t0 + dt_cost, ...`` over
    ``[t0, tf)``, so a delta=1 run of length T totals ``n * c_d * T``.
    ``dt_cost`` must be a multiple of the trajectory's ``dt_output`` and
    divide ``tf - t0`` evenly.
    """
    sc = trajectory.scenario
    if dt_cost <= 0:
        raise GridError(f"dt_cost must be positive, got {dt_cost}")
    ratio = dt_cost / sc.dt_output
    stride = round(ratio)
    if stride < 1 or abs(ratio - stride) > 1e-9 * max(1.0, ratio):
        raise GridError(
            f"dt_cost={dt_cost} is not aligned with dt_output={sc.dt_output}")
    span_ratio = (sc.tf - sc.t0) / dt_cost
    if abs(span_ratio - round(span_ratio)) > 1e-9 * max(1.0, span_ratio):
        raise GridError(
            f"dt_cost={dt_cost} does not divide tf - t0 = {sc.tf - sc.t0}")

    p = sc.params
    idx = np.arange(0, sc.n_output_steps, stride)
    risk = _risk(trajectory.s[idx], trajectory.i[idx], p.beta, p.n)
    rate = p.n * (sc.delta * costs.c_d + (1.0 - sc.delta) * risk * costs.c_i)
    return float(np.sum(rate) * dt_cost)


def cost_fraction(state: CompartmentState, delta: float,
                  params: EpiParams) -> float:
    """Break-even ratio c_d/c_i at which distancing stops paying off.

    ``phi = (1 - delta) * beta * S * I / (delta * n**2)``, i.e. the
    infection risk scaled by ``(1 - delta) / delta``.  At delta = 0 the
    ratio is UNBOUNDED (math.inf) by contract.
    """
    if not 0.0 <= delta <= 1.0:
        raise DomainError(f"delta must be in [0, 1], got {delta}")
    if delta == 0.0:
        return UNBOUNDED
    return _phi(state.s, state.i, delta, params.beta, params.n)


def sensitivity_curve(scenario: Scenario, h: float = DEFAULT_FD_STEP) -> np.ndarray:
    """dI/d(delta) at every output time of the scenario.

    Central second-order difference in delta; falls back to the
    one-sided second-order stencil when ``delta +/- h`` leaves [0, 1].
    """
    if not 0.0 < h <= MAX_FD_STEP:
        raise DomainError(f"h must be in (0, {MAX_FD_STEP}], got {h}")
    d = scenario.delta
    if d - h >= 0.0 and d + h <= 1.0:
        lo = integrate(with_delta(scenario, d - h))
        hi = integrate(with_delta(scenario, d + h))
        return (hi.i - lo.i) / (2.0 * h)
    if d - h < 0.0:
        y0 = integrate(scenario)
        y1 = integrate(with_delta(scenario, d + h))
        y2 = integrate(with_delta(scenario, d + 2.0 * h))
        return (-3.0 * y0.i + 4.0 * y1.i - y2.i) / (2.0 * h)
    y0 = integrate(scenario)
    y1 = integrate(with_delta(scenario, d - h))
    y2 = integrate(with_delta(scenario, d - 2.0 * h))
    return (3.0 * y0.i - 4.0 * y1.i + y2.i) / (2.0 * h)


def marginal_utility(scenario: Scenario, t: float,
                     h: float = DEFAULT_FD_STEP) -> float:
    """Marginal utility of distancing at time ``t``: the finite-difference
    estimate of dI/d(delta), in individuals per unit delta.

    ``t`` must lie on the scenario's output grid.
    """
    k = _grid_index(scenario, t)
    return float(sensitivity_curve(scenario, h)[k])


def strategy_report(trajectory: Trajectory, costs: CostParams
                    ) -> list[tuple[float, float, float, float, StrategyChoice]]:
    """Per-sample rows ``(t, r_i, j_distance, j_not, preferred)``."""
    p = trajectory.scenario.params
    rows = []
    for state in trajectory.states():
        r = infection_risk(state, p)
        j_d, j_not = step_costs(state, p, costs)
        rows.append((state.t, r, j_d, j_not,
                     preferred_strategy(state, p, costs)))
    return rows


def _grid_index(scenario: Scenario, t: float) -> int:
    pos = (t - scenario.t0) / scenario.dt_output
    k = round(pos)
    if k < 0 or k > scenario.n_output_steps or \
            abs(pos - k) > 1e-9 * max(1.0, abs(pos)):
        raise GridError(
            f"t={t} is not on the output grid [{scenario.t0}, {scenario.tf}] "
            f"step {scenario.dt_output}")
    return k
