"""Produce the CSV field files that the plotting front end consumes.

Writes the (r0, gamma_inv) trajectory sweep plus the three (delta, t)
fields into ./out/.  The same files can be produced from the command
line, e.g.::

    distgame sweep-grid --out out/grid_sweep.csv
    distgame cost-field --out out/cost_field.csv
"""

from pathlib import Path

from distgame import (
    EpiParams,
    GridSpec,
    Scenario,
    cost_fraction_field,
    field_by_delta,
    sweep_r0_gamma,
    utility_field,
)
from distgame.serialize import (
    write_field_csv,
    write_grid_sweep_csv,
)

out_dir = Path("out")
out_dir.mkdir(exist_ok=True)

params = EpiParams(r0=2.67, gamma=1 / 8.5, n=10_000)
base = Scenario(params=params, i0_fraction=0.001, delta=0.0, tf=180.0)
grid = GridSpec.default(base)

trajectories = sweep_r0_gamma(grid)
write_grid_sweep_csv(grid, trajectories, out_dir / "grid_sweep.csv")
print(f"grid_sweep.csv      : {len(trajectories)} trajectories")

for quantity in ("S", "I", "R"):
    field = field_by_delta(grid, quantity)
    write_field_csv(field, out_dir / f"field_{quantity}.csv")
    print(f"field_{quantity}.csv         : {field.values.shape} values")

write_field_csv(utility_field(grid, h=0.01), out_dir / "utility_field.csv")
print("utility_field.csv   : written")

write_field_csv(cost_fraction_field(grid), out_dir / "cost_field.csv")
print("cost_field.csv      : written (delta=0 column is 'inf')")
