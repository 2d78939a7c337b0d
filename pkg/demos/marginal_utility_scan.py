"""Where does one extra unit of distancing help the most?

The marginal utility dI/d(delta) is estimated with central differences
of two integrator runs.  Scanning it over (delta, t) shows the effect
is strongest early in the outbreak and at low adherence levels, and has
largely faded once half the population distances.
"""

import numpy as np

from distgame import (
    EpiParams,
    GridSpec,
    Scenario,
    integrate,
    marginal_utility,
    utility_field,
    with_delta,
)

params = EpiParams(r0=2.67, gamma=1 / 8.5, n=10_000)
base = Scenario(params=params, i0_fraction=0.001, delta=0.0, tf=180.0)

# single-point estimate, with a step-halving sanity check
sc = with_delta(base, 0.1)
for h in (0.02, 0.01, 0.005):
    print(f"dI/d(delta) at delta=0.1, day 20, h={h:<5}: "
          f"{marginal_utility(sc, t=20.0, h=h):10.3f}")

field = utility_field(GridSpec.default(base), h=0.01)
k, j = np.unravel_index(np.argmax(np.abs(field.values)), field.values.shape)
print(f"\nstrongest response: {field.values[k, j]:,.0f} infections per "
      f"unit delta\n  at delta={field.axis1_values[k]:.2f}, "
      f"day {field.axis2_values[j]:.0f}")

peak_day = float(integrate(base).t[np.argmax(integrate(base).i)])
print(f"(baseline epidemic peaks on day {peak_day:.0f})")

print("\n|dI/d(delta)| on day 20 by adherence level:")
j20 = np.nonzero(field.axis2_values == 20.0)[0][0]
for delta in (0.0, 0.1, 0.2, 0.3, 0.5, 0.7, 0.9):
    k = field.axis1_values.tolist().index(delta)
    bar = "#" * int(abs(field.values[k, j20]) / 40)
    print(f"  delta={delta:.1f}  {abs(field.values[k, j20]):8.1f}  {bar}")
