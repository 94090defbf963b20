import numpy as np
import pytest

from elastica.common_exceptions import DimensionMismatch, ElasticaException
from elastica.model.grid import Grid, Multipliers, State
from elastica.model.operators import (
    Field,
    centered_curvature,
    diff_backward,
    diff_centered,
    diff_forward,
)
from tests.fixtures import TWO_PI


def test_grid_validation() -> None:
    with pytest.raises(ElasticaException):
        Grid(4, 1.0)
    with pytest.raises(ElasticaException):
        Grid(16, 0.0)
    grid = Grid(16, 2.0)
    assert grid.ds == 0.125
    assert grid.s[-1] == pytest.approx(1.875)
    assert grid == Grid(16, 2.0)
    assert grid != Grid(32, 2.0)


def test_state_validation(grid) -> None:
    with pytest.raises(DimensionMismatch):
        State(np.zeros(3), np.zeros(4))
    with pytest.raises(ElasticaException):
        State(np.array([0.0, np.nan]), np.zeros(2))
    with pytest.raises(DimensionMismatch):
        State(np.zeros(8), np.zeros(8)).check_grid(grid)


def test_eta_round_trip(random_state) -> None:
    again = State.from_eta(random_state.eta)
    np.testing.assert_array_equal(again.theta, random_state.theta)
    np.testing.assert_array_equal(again.rho, random_state.rho)


def test_multipliers() -> None:
    multipliers = Multipliers.from_array(np.array([1.0, 2.0, 3.0]))
    assert multipliers.as_tuple() == (1.0, 2.0, 3.0)
    assert Multipliers().as_tuple() == (0.0, 0.0, 0.0)
    with pytest.raises(ElasticaException):
        Multipliers(mass=np.inf)


def test_differences_of_the_ramp_see_the_wrap() -> None:
    grid = Grid(10, TWO_PI)
    state = State(grid.ramp(2), np.arange(10.0))
    expected = np.full(10, 2 * TWO_PI / 10)
    np.testing.assert_allclose(diff_forward(state, grid, Field.theta, 2), expected)
    np.testing.assert_allclose(diff_backward(state, grid, Field.theta, 2), expected)
    np.testing.assert_allclose(diff_centered(state, grid, Field.theta, 2), 2 * expected)
    np.testing.assert_allclose(centered_curvature(state.theta, grid, 2), 2.0)


def test_density_differences_are_periodic() -> None:
    grid = Grid(8, 1.0)
    state = State(np.zeros(8), np.arange(8.0))
    forward = diff_forward(state, grid, Field.rho)
    assert forward[-1] == -7.0
    np.testing.assert_array_equal(forward[:-1], 1.0)
    assert diff_forward(state, grid, Field.rho).sum() == 0.0
