import pytest

from distgame import EpiParams, Scenario

# Reference configuration used throughout: r0 2.67, mean infectious
# period 8.5 days, population 10000, 0.1% seeded.
BASELINE_R0 = 2.67
BASELINE_GAMMA_INV = 8.5
BASELINE_N = 10000.0
BASELINE_I0 = 0.001


@pytest.fixture
def baseline_params():
    return EpiParams(r0=BASELINE_R0, gamma=1.0 / BASELINE_GAMMA_INV,
                     n=BASELINE_N)


@pytest.fixture
def baseline_scenario(baseline_params):
    return Scenario(params=baseline_params, i0_fraction=BASELINE_I0,
                    delta=0.0, t0=0.0, tf=180.0,
                    dt_internal=0.05, dt_output=0.5)
