"""Deterministic social-distancing SIR game toolkit.

Simulates distancing-adjusted SIR dynamics with a reproducible
fixed-step integrator and layers the distancing game's economics on
top: infection risk, step and total social costs, break-even cost
fractions, marginal utility of distancing, and parameter-sweep fields
over (r0, gamma) and (delta, t) grids.
"""

__version__ = "0.1.0"

from .econ import (
    CostParams,
    RiskPoint,
    StrategyChoice,
    UNBOUNDED,
    cost_fraction,
    infection_risk,
    marginal_utility,
    preferred_strategy,
    risk_series,
    sensitivity_curve,
    social_cost_at,
    step_costs,
    strategy_report,
    total_social_cost,
)
from .errors import (
    ConfigError,
    DistGameError,
    DomainError,
    GridError,
    IntegrationError,
    OracleError,
)
from .oracles import final_size_oracle, peak_prevalence_analytic
from .sir import (
    CompartmentState,
    EpiParams,
    Scenario,
    Trajectory,
    beta_from_r0,
    derivative,
    integrate,
    with_delta,
)
from .sweep import (
    DEFAULT_DELTA_VALUES,
    DEFAULT_GAMMA_INV_VALUES,
    DEFAULT_R0_VALUES,
    FieldResult,
    GridSpec,
    cost_fraction_field,
    field_by_delta,
    sweep_r0_gamma,
    utility_field,
)

__all__ = [
    "__version__",
    # dynamics
    "EpiParams", "Scenario", "CompartmentState", "Trajectory",
    "beta_from_r0", "derivative", "integrate", "with_delta",
    # oracles
    "final_size_oracle", "peak_prevalence_analytic",
    # economics
    "CostParams", "StrategyChoice", "RiskPoint", "UNBOUNDED",
    "infection_risk", "risk_series", "step_costs", "preferred_strategy",
    "social_cost_at", "total_social_cost", "cost_fraction",
    "sensitivity_curve", "marginal_utility", "strategy_report",
    # sweeps
    "GridSpec", "FieldResult", "sweep_r0_gamma", "field_by_delta",
    "utility_field", "cost_fraction_field",
    "DEFAULT_R0_VALUES", "DEFAULT_GAMMA_INV_VALUES", "DEFAULT_DELTA_VALUES",
    # errors
    "DistGameError", "DomainError", "IntegrationError", "OracleError",
    "GridError", "ConfigError",
]
