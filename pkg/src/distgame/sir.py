"""Distancing-adjusted SIR dynamics and its deterministic integrator.

The closed-population model tracks susceptible (S), infectious (I) and
removed (R) counts.  A population-wide distancing level ``delta`` in
[0, 1] scales the transmission flow::

    dS/dt = -(1 - delta) * beta * S * I / n
    dI/dt =  (1 - delta) * beta * S * I / n - gamma * I
    dR/dt =  gamma * I

with ``beta = r0 * gamma``.  Integration uses fixed-step classical RK4:
identical inputs give bit-identical outputs, which the grid-sweep and
metamorphic tests rely on.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, GridError, IntegrationError

# Negative compartment values above this (relative to n) abort integration;
# smaller ones are treated as roundoff and clamped to zero at output.
NEGATIVITY_TOL = 1e-9
# Allowed drift of S+I+R away from n, relative to n.
CONSERVATION_TOL = 1e-6


def beta_from_r0(r0: float, gamma: float) -> float:
    """Transmission rate implied by a basic reproduction number.

    ``beta = r0 * gamma`` where ``gamma`` is the recovery rate per day
    (inverse of the mean infectious period).  Requires ``r0 > 0`` and
    ``gamma > 0``.
    """
    if not gamma > 0:
        raise DomainError(f"gamma must be > 0, got {gamma}")
    if not r0 > 0:
        raise DomainError(f"r0 must be > 0, got {r0}")
    return r0 * gamma


@dataclass(frozen=True)
class EpiParams:
    """Transmission and recovery parameters for one population.

    ``beta`` is derived as ``r0 * gamma`` when not given explicitly;
    `from_beta` goes the other way.  All rates are per day, ``n`` is the
    population size.
    """

    r0: float
    gamma: float
    n: float
    beta: float = None  # type: ignore[assignment]  # derived in __post_init__

    def __post_init__(self):
        if not self.gamma > 0:
            raise DomainError(f"gamma must be > 0, got {self.gamma}")
        if not self.r0 > 0:
            raise DomainError(f"r0 must be > 0, got {self.r0}")
        if not self.n > 0:
            raise DomainError(f"n must be > 0, got {self.n}")
        if self.beta is None:
            object.__setattr__(self, "beta", self.r0 * self.gamma)
        elif not self.beta > 0:
            raise DomainError(f"beta must be > 0, got {self.beta}")

    @classmethod
    def from_beta(cls, beta: float, gamma: float, n: float) -> "EpiParams":
        """Build params from an explicit transmission rate.

        ``r0`` is derived as ``beta / gamma`` while ``beta`` is stored
        exactly as given, so transformed rates (e.g. ``(1 - delta) * beta``)
        round-trip bit-identically into the dynamics.
        """
        if not gamma > 0:
            raise DomainError(f"gamma must be > 0, got {gamma}")
        return cls(r0=beta / gamma, gamma=gamma, n=n, beta=beta)


@dataclass(frozen=True)
class CompartmentState:
    """Compartment counts at one instant: time ``t`` in days, counts
    ``s``, ``i``, ``r`` in individuals."""

    t: float
    s: float
    i: float
    r: float

    def __post_init__(self):
        if self.s < 0 or self.i < 0 or self.r < 0:
            raise DomainError(
                f"compartments must be non-negative, got "
                f"s={self.s}, i={self.i}, r={self.r}")


@dataclass(frozen=True)
class Scenario:
    """A fully specified simulation run.

    ``delta`` is the fraction of the population distancing, constant over
    the run.  ``dt_internal`` is the RK4 step; samples are emitted every
    ``dt_output``.  ``dt_internal`` must divide ``dt_output`` and
    ``dt_output`` must divide ``tf - t0`` so the output grid lands exactly
    on integrator steps.
    """

    params: EpiParams
    i0_fraction: float = 0.001
    delta: float = 0.0
    t0: float = 0.0
    tf: float = 180.0
    dt_internal: float = 0.05
    dt_output: float = 0.5

    def __post_init__(self):
        if not 0.0 <= self.delta <= 1.0:
            raise DomainError(f"delta must be in [0, 1], got {self.delta}")
        if not 0.0 <= self.i0_fraction <= 1.0:
            raise DomainError(
                f"i0_fraction must be in [0, 1], got {self.i0_fraction}")
        if not self.t0 < self.tf:
            raise DomainError(f"need t0 < tf, got t0={self.t0}, tf={self.tf}")
        if not 0.0 < self.dt_internal <= self.dt_output:
            raise DomainError(
                f"need 0 < dt_internal <= dt_output, got "
                f"dt_internal={self.dt_internal}, dt_output={self.dt_output}")
        _exact_multiple(self.tf - self.t0, self.dt_output,
                        "tf - t0", "dt_output")
        _exact_multiple(self.dt_output, self.dt_internal,
                        "dt_output", "dt_internal")

    @property
    def n_output_steps(self) -> int:
        return round((self.tf - self.t0) / self.dt_output)

    @property
    def n_substeps(self) -> int:
        return round(self.dt_output / self.dt_internal)

    def output_times(self) -> np.ndarray:
        t = self.t0 + self.dt_output * np.arange(self.n_output_steps + 1)
        t.setflags(write=False)
        return t

    def initial_state(self) -> CompartmentState:
        n = self.params.n
        i0 = n * self.i0_fraction
        return CompartmentState(t=self.t0, s=n - i0, i=i0, r=0.0)


def _exact_multiple(total: float, step: float, total_name: str,
                    step_name: str) -> int:
    ratio = total / step
    k = round(ratio)
    if k < 1 or abs(ratio - k) > 1e-9 * max(1.0, abs(ratio)):
        raise DomainError(
            f"{step_name}={step} must divide {total_name}={total} evenly")
    return k


@dataclass(frozen=True)
class Trajectory:
    """Sampled solution of one scenario.

    Arrays are aligned and read-only: ``t[k]`` is ``t0 + k * dt_output``,
    ``s``, ``i``, ``r`` hold the compartment counts.  Sharing across
    threads is safe.
    """

    scenario: Scenario
    t: np.ndarray
    s: np.ndarray
    i: np.ndarray
    r: np.ndarray

    def __post_init__(self):
        for arr in (self.t, self.s, self.i, self.r):
            arr.setflags(write=False)

    def __len__(self) -> int:
        return len(self.t)

    def index_of(self, t_query: float) -> int:
        """Index of an output sample, raising if ``t_query`` is off-grid."""
        dt = self.scenario.dt_output
        pos = (t_query - self.scenario.t0) / dt
        k = round(pos)
        if k < 0 or k >= len(self.t) or abs(pos - k) > 1e-9 * max(1.0, abs(pos)):
            raise GridError(
                f"t={t_query} is not on the output grid "
                f"[{self.scenario.t0}, {self.scenario.tf}] step {dt}")
        return k

    def state_at(self, t_query: float) -> CompartmentState:
        k = self.index_of(t_query)
        return CompartmentState(t=float(self.t[k]), s=float(self.s[k]),
                                i=float(self.i[k]), r=float(self.r[k]))

    def states(self):
        """Iterate over samples as CompartmentState values."""
        for k in range(len(self.t)):
            yield CompartmentState(t=float(self.t[k]), s=float(self.s[k]),
                                   i=float(self.i[k]), r=float(self.r[k]))


def derivative(state: CompartmentState, params: EpiParams,
               delta: float) -> tuple[float, float, float]:
    """Right-hand side of the distancing-adjusted SIR system.

    Returns ``(ds_dt, di_dt, dr_dt)`` in individuals per day; the three
    components sum to zero up to rounding.
    """
    if not 0.0 <= delta <= 1.0:
        raise DomainError(f"delta must be in [0, 1], got {delta}")
    beta_eff = (1.0 - delta) * params.beta
    flow = beta_eff * state.s * state.i / params.n
    rec = params.gamma * state.i
    return (-flow, flow - rec, rec)


def integrate(scenario: Scenario) -> Trajectory:
    """Integrate a scenario with fixed-step classical RK4.

    Deterministic: identical inputs produce bit-identical trajectories.
    Raises IntegrationError if any compartment drops below
    ``-NEGATIVITY_TOL * n`` or conservation drifts beyond
    ``CONSERVATION_TOL * n``; negative values within the roundoff band
    are clamped to zero in the output.
    """
    p = scenario.params
    n = p.n
    gamma = p.gamma
    # (1 - delta) folded into beta once, so a pre-scaled-beta scenario at
    # delta=0 replays the exact same float sequence.
    beta_eff = (1.0 - scenario.delta) * p.beta
    h = scenario.dt_internal
    n_out = scenario.n_output_steps
    n_sub = scenario.n_substeps

    init = scenario.initial_state()
    s, i, r = init.s, init.i, init.r

    t_arr = np.asarray(scenario.output_times())
    s_arr = np.empty(n_out + 1)
    i_arr = np.empty(n_out + 1)
    r_arr = np.empty(n_out + 1)
    _store_sample(0, float(t_arr[0]), s, i, r, n, s_arr, i_arr, r_arr)

    neg_abort = -NEGATIVITY_TOL * n
    for k in range(n_out):
        for _ in range(n_sub):
            f1 = beta_eff * s * i / n
            g1 = gamma * i
            s2 = s - 0.5 * h * f1
            i2 = i + 0.5 * h * (f1 - g1)
            f2 = beta_eff * s2 * i2 / n
            g2 = gamma * i2
            s3 = s - 0.5 * h * f2
            i3 = i + 0.5 * h * (f2 - g2)
            f3 = beta_eff * s3 * i3 / n
            g3 = gamma * i3
            s4 = s - h * f3
            i4 = i + h * (f3 - g3)
            f4 = beta_eff * s4 * i4 / n
            g4 = gamma * i4
            s += h / 6.0 * (-f1 - 2.0 * f2 - 2.0 * f3 - f4)
            i += h / 6.0 * ((f1 - g1) + 2.0 * (f2 - g2) + 2.0 * (f3 - g3)
                            + (f4 - g4))
            r += h / 6.0 * (g1 + 2.0 * g2 + 2.0 * g3 + g4)
        t_k = float(t_arr[k + 1])
        if s < neg_abort or i < neg_abort or r < neg_abort:
            name = "S" if s < neg_abort else ("I" if i < neg_abort else "R")
            val = {"S": s, "I": i, "R": r}[name]
            raise IntegrationError(
                f"compartment {name}={val} below tolerance at t={t_k}",
                t=t_k, compartment=name)
        _store_sample(k + 1, t_k, s, i, r, n, s_arr, i_arr, r_arr)

    return Trajectory(scenario=scenario, t=t_arr, s=s_arr, i=i_arr, r=r_arr)


def _store_sample(k, t, s, i, r, n, s_arr, i_arr, r_arr):
    # Clamp roundoff-sized negatives; check the closed-population budget.
    s_arr[k] = s if s > 0.0 else 0.0
    i_arr[k] = i if i > 0.0 else 0.0
    r_arr[k] = r if r > 0.0 else 0.0
    drift = (s + i + r) - n
    if not math.isfinite(drift) or abs(drift) > CONSERVATION_TOL * n:
        raise IntegrationError(
            f"S+I+R drifted from n by {drift} at t={t}", t=t, compartment="sum")


def with_delta(scenario: Scenario, delta: float) -> Scenario:
    """Copy of a scenario with only the distancing level changed."""
    return dataclasses.replace(scenario, delta=delta)
