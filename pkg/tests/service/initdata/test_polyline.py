import numpy as np
import pytest

from elastica.common_exceptions import DegenerateEdge, InfeasibleInitialState
from elastica.model.constraints import discrete_constraints
from elastica.model.grid import Grid
from elastica.service.initdata.polyline import (
    resample_closed_polyline,
    state_from_polyline,
    tangent_angles,
    turning_number,
)
from tests.fixtures import TWO_PI, make_params

UNIT_SQUARE = np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])


def test_resample_the_unit_square() -> None:
    samples = resample_closed_polyline(UNIT_SQUARE, 8)
    expected = [
        [0.0, 0.0], [0.5, 0.0], [1.0, 0.0], [1.0, 0.5],
        [1.0, 1.0], [0.5, 1.0], [0.0, 1.0], [0.0, 0.5],
    ]
    np.testing.assert_allclose(samples, expected, atol=1e-15)

    closed = np.vstack((UNIT_SQUARE, UNIT_SQUARE[:1]))
    np.testing.assert_array_equal(resample_closed_polyline(closed, 8), samples)


def test_repeated_points() -> None:
    with pytest.raises(DegenerateEdge):
        resample_closed_polyline(np.vstack((UNIT_SQUARE[:2], UNIT_SQUARE[1:])), 8)


@pytest.mark.parametrize("omega", [-1, 0, 1, 2, 3])
def test_turning_number_of_ramps(omega) -> None:
    assert turning_number(Grid(32, TWO_PI).ramp(omega)) == omega


def test_orientation() -> None:
    counterclockwise = tangent_angles(resample_closed_polyline(UNIT_SQUARE, 16))
    clockwise = tangent_angles(resample_closed_polyline(UNIT_SQUARE[::-1], 16))
    assert turning_number(counterclockwise) == 1
    assert turning_number(clockwise) == -1


def test_state_from_polyline() -> None:
    params = make_params()
    grid = Grid(64, TWO_PI)
    t = TWO_PI * np.arange(500) / 500
    ellipse = np.column_stack((2.0 * np.cos(t), np.sin(t)))
    state = state_from_polyline(ellipse, params, grid)
    assert np.max(np.abs(discrete_constraints(state, params, grid))) <= 1e-12
    assert turning_number(state.theta) == 1
    np.testing.assert_array_equal(state.rho, np.zeros(grid.N))

    with pytest.raises(InfeasibleInitialState):
        state_from_polyline(ellipse[::-1], params, grid)
