"""Analytic oracles for checking the integrator against known SIR results.

Both functions work in population fractions and stay deliberately
independent of the RK4 code path: the final-size relation is solved by
plain bisection and the peak comes from the conserved quantity
``i + s - ln(s) / r0``.
"""

from __future__ import annotations

import math

from .errors import DomainError, OracleError

BISECTION_TOL = 1e-10


def final_size_oracle(r0_eff: float, s0_fraction: float,
                      i0_fraction: float) -> float:
    """Limiting susceptible fraction after burnout.

    Solves ``s_inf = s0 * exp(-r0_eff * (1 - s_inf))`` for the root in
    ``(0, s0]`` by bisection to absolute tolerance 1e-10.  ``r0_eff`` is
    the effective reproduction number, e.g. ``(1 - delta) * r0`` under
    constant distancing.
    """
    if not r0_eff > 0:
        raise DomainError(f"r0_eff must be > 0, got {r0_eff}")
    if not 0 < s0_fraction <= 1:
        raise DomainError(f"s0_fraction must be in (0, 1], got {s0_fraction}")
    if i0_fraction < 0 or s0_fraction + i0_fraction > 1 + 1e-12:
        raise DomainError(
            f"need i0 >= 0 and s0 + i0 <= 1, got s0={s0_fraction}, "
            f"i0={i0_fraction}")

    def f(s: float) -> float:
        return s - s0_fraction * math.exp(-r0_eff * (1.0 - s))

    lo, hi = 0.0, s0_fraction
    f_lo, f_hi = f(lo), f(hi)
    if f_hi == 0.0:
        return hi
    if f_lo * f_hi > 0:
        raise OracleError(
            f"no sign change on bracket [{lo}, {hi}]: "
            f"f(lo)={f_lo}, f(hi)={f_hi}")
    while hi - lo > BISECTION_TOL:
        mid = 0.5 * (lo + hi)
        if f(mid) <= 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def peak_prevalence_analytic(r0_eff: float, s0_fraction: float,
                             i0_fraction: float) -> float:
    """Peak infectious fraction from the SIR conserved quantity.

    ``i_max = i0 + s0 - (1 + ln(r0_eff * s0)) / r0_eff`` when
    ``r0_eff * s0 > 1``; in the subcritical regime prevalence only decays,
    so ``i0`` itself is returned.
    """
    if not r0_eff > 0:
        raise DomainError(f"r0_eff must be > 0, got {r0_eff}")
    if not 0 < s0_fraction <= 1:
        raise DomainError(f"s0_fraction must be in (0, 1], got {s0_fraction}")
    if i0_fraction < 0 or s0_fraction + i0_fraction > 1 + 1e-12:
        raise DomainError(
            f"need i0 >= 0 and s0 + i0 <= 1, got s0={s0_fraction}, "
            f"i0={i0_fraction}")
    if r0_eff * s0_fraction <= 1.0:
        return i0_fraction
    return (i0_fraction + s0_fraction
            - (1.0 + math.log(r0_eff * s0_fraction)) / r0_eff)
