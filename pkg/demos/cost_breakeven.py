"""Costs and strategy: when does distancing stop paying for itself?

Per person and per day, distancing costs c_d while exposure costs the
infection risk times the cost of illness, r_i * c_i.  The break-even
cost fraction phi says how expensive distancing may get, relative to
illness, before a distancing level delta stops being worth it.
"""

from distgame import (
    CostParams,
    EpiParams,
    Scenario,
    cost_fraction,
    infection_risk,
    integrate,
    preferred_strategy,
    step_costs,
    total_social_cost,
    with_delta,
)

params = EpiParams(r0=2.67, gamma=1 / 8.5, n=10_000)
base = Scenario(params=params, i0_fraction=0.001, delta=0.0, tf=180.0)
costs = CostParams(c_d=1.0, c_i=3045.0)   # illness vastly dearer per day

trajectory = integrate(base)

print("during the uncontrolled outbreak (c_d=1, c_i=3045):")
print("  day    risk r_i   j_not    preferred")
for day in (0.0, 20.0, 40.0, 60.0, 90.0):
    state = trajectory.state_at(day)
    _, j_not = step_costs(state, params, costs)
    choice = preferred_strategy(state, params, costs)
    print(f"  {day:4.0f}  {infection_risk(state, params):9.5f}"
          f"  {j_not:7.2f}   {choice.value}")

print("\nbreak-even cost fraction phi at the day-40 state:")
state = trajectory.state_at(40.0)
for delta in (0.0, 0.1, 0.3, 0.5, 0.8, 1.0):
    phi = cost_fraction(state, delta, params)
    print(f"  delta={delta:.1f}  phi={phi:.5f}"
          + ("  (any finite c_d is dominated)" if phi == float("inf") else ""))

print("\ntotal social cost over 180 days (c_d=1, c_i=100):")
mild = CostParams(c_d=1.0, c_i=100.0)
for delta in (0.0, 0.3, 0.6255, 1.0):
    total = total_social_cost(integrate(with_delta(base, delta)), mild,
                              dt_cost=1.0)
    print(f"  delta={delta:6.4f}  {total:14,.0f}")
