import math

import numpy as np
import pytest

from elastica.model.grid import Multipliers, State
from elastica.service.flow.flow_diagnostics import (
    TRACE_COLUMNS,
    density_variance,
    trace_row,
)
from tests.fixtures import make_params


def test_circle_row(circle, params, grid) -> None:
    row = trace_row(0, 0.0, 1e-4, circle, Multipliers(mass=-0.5), params, grid, symmetry_k=4)
    assert list(row) == TRACE_COLUMNS
    assert row["E"] == pytest.approx(np.pi)
    assert row["E_rho"] == 0.0
    assert row["lambda_mass"] == -0.5
    assert row["lrho"] == pytest.approx(-0.5)
    assert row["zeros"] == 0
    assert row["sign_changes"] == 0
    assert row["min_kappa"] == pytest.approx(1.0)
    assert row["rot_residual"] < 1e-12
    assert row["embedded"] is True
    assert row["theta_mean"] == pytest.approx(np.sum(circle.theta) * grid.ds)


def test_rows_without_geometry(circle, params, grid) -> None:
    row = trace_row(3, 0.1, 1e-4, circle, Multipliers(), params, grid, with_geometry=False)
    assert math.isnan(row["rot_residual"])
    assert math.isnan(row["axial_residual"])
    assert row["embedded"] is None


def test_figure_eight_like_row(grid) -> None:
    """A straight, doubled back segment has singular Π; the row still fills in."""
    params = make_params(omega=0)
    state = State(np.where(grid.s < np.pi, 0.0, np.pi), np.zeros(grid.N))
    row = trace_row(0, 0.0, 1e-4, state, Multipliers(), params, grid, with_geometry=False)
    assert math.isnan(row["lth1"])
    assert math.isnan(row["lrho"])


def test_density_variance(params, grid) -> None:
    state = State(grid.ramp(1), np.sin(grid.s))
    assert density_variance(state, params, grid) == pytest.approx(np.pi)
