import subprocess

import pytest

DELTAS = "0,0.2,0.4,0.6,0.8,1"


def _distgame(workdir, *args):
    proc = subprocess.run(["distgame", *args], cwd=workdir,
                          capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    return proc


@pytest.fixture(scope="session")
def golden_dir(tmp_path_factory):
    """CSV inputs produced by the simulator CLI, shared per session."""
    workdir = tmp_path_factory.mktemp("golden")
    _distgame(workdir, "sweep-grid", "--tf", "40",
              "--r0-values", "1.5,2.67", "--gamma-inv-values", "5,8.5",
              "--out", "grid_sweep.csv")
    for quantity in ("S", "I", "R"):
        _distgame(workdir, "field", "--quantity", quantity, "--tf", "40",
                  "--delta-values", DELTAS,
                  "--out", f"field_{quantity}.csv")
    _distgame(workdir, "utility-field", "--tf", "40",
              "--delta-values", DELTAS, "--out", "utility_field.csv")
    _distgame(workdir, "cost-field", "--tf", "40",
              "--delta-values", DELTAS, "--out", "cost_field.csv")
    _distgame(workdir, "field", "--quantity", "I", "--tf", "40",
              "--delta-values", "0.3", "--out", "single_column.csv")
    return workdir
