"""Simulate one outbreak and check it against the analytic oracles.

A population of 10,000 with 0.1% initially infected, r0 = 2.67 and a
mean infectious period of 8.5 days, nobody distancing.
"""

from distgame import (
    EpiParams,
    Scenario,
    final_size_oracle,
    integrate,
    peak_prevalence_analytic,
)

params = EpiParams(r0=2.67, gamma=1 / 8.5, n=10_000)
scenario = Scenario(params=params, i0_fraction=0.001, delta=0.0, tf=365.0)
trajectory = integrate(scenario)

peak_idx = trajectory.i.argmax()
print(f"transmission rate beta     : {params.beta:.4f} / day")
print(f"peak prevalence            : {trajectory.i[peak_idx]:,.0f} "
      f"at day {trajectory.t[peak_idx]:.0f}")
print(f"  analytic peak            : "
      f"{params.n * peak_prevalence_analytic(2.67, 0.999, 0.001):,.0f}")
print(f"still susceptible at day {scenario.tf:.0f}: "
      f"{trajectory.s[-1]:,.0f}")
print(f"  bisection oracle         : "
      f"{params.n * final_size_oracle(2.67, 0.999, 0.001):,.0f}")

# a coarse day-by-day view of the first three months
print("\n  day      S      I      R")
for day in range(0, 91, 10):
    state = trajectory.state_at(float(day))
    print(f"  {day:3d} {state.s:6.0f} {state.i:6.0f} {state.r:6.0f}")
