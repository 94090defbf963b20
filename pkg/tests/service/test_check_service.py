import json

import numpy as np
import pytest

from elastica.model.grid import State
from elastica.service.check_service import state_report
from elastica.service.initdata.generators import make_perturbed_circle
from tests.fixtures import make_params


def test_circle_report(circle, params, grid) -> None:
    report = state_report(circle, params, grid, symmetry_k=4)
    assert report["energy"] == pytest.approx(np.pi)
    assert report["E_rho"] == 0.0
    assert max(abs(value) for value in report["constraints"].values()) < 1e-12
    np.testing.assert_allclose(report["continuous_multipliers"]["lambda_theta"], 0.0, atol=1e-12)
    assert report["continuous_multipliers"]["lambda_rho"] == pytest.approx(-0.5)
    assert report["discrete_multipliers"][0] == pytest.approx(-0.5)
    assert report["stationary_residual"] < 1e-9
    assert report["kappa"]["zeros"] == 0
    assert report["kappa"]["min"] == pytest.approx(1.0)
    assert report["symmetry"]["k"] == 4
    assert report["symmetry"]["rot_residual"] < 1e-12
    assert report["closure_defect"] < 1e-12
    assert report["embedded"] is True
    assert report["embeddedness_threshold"] > 0
    assert report["rho_interval"] == [0.0, 0.0]
    assert report["classification"] == "HomogeneousCircle"
    json.dumps(report)


def test_report_of_a_perturbed_state(params, grid) -> None:
    state = make_perturbed_circle(
        params, grid, theta_modes=[(2, 0.0, 0.05)], rho_modes=[(1, 0.2, 0.0)]
    )
    report = state_report(state, params, grid)
    assert report["E_rho"] > 0
    assert report["stationary_residual"] > 1e-3
    assert report["classification"] == "NontrivialDensity"
    assert report["rho_interval"][0] < 0 < report["rho_interval"][1]


def test_degenerate_state_report(grid) -> None:
    params = make_params(omega=0)
    state = State(np.where(grid.s < np.pi, 0.0, np.pi), np.zeros(grid.N))
    report = state_report(state, params, grid)
    assert report["continuous_multipliers"] == {"lambda_theta": None, "lambda_rho": None}
