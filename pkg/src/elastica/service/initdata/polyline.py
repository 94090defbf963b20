import logging

import numpy as np

from elastica.common_exceptions import DegenerateEdge, InfeasibleInitialState
from elastica.model.grid import Grid, State
from elastica.schemas.model_params import ModelParams
from elastica.service.initdata.projection import project_to_constraints

logger = logging.getLogger(__name__)


def resample_closed_polyline(points: np.ndarray, N: int) -> np.ndarray:
    """N points equally spaced in arc length along the closed polyline, the
    first one at points[0]."""
    points = np.asarray(points, dtype=float)
    if np.allclose(points[0], points[-1]):
        points = points[:-1]
    closed = np.vstack((points, points[:1]))
    edge_lengths = np.linalg.norm(np.diff(closed, axis=0), axis=1)
    if np.any(edge_lengths == 0):
        raise DegenerateEdge("Polyline has repeated consecutive points")
    arclength = np.concatenate(([0.0], np.cumsum(edge_lengths)))
    targets = np.arange(N) * arclength[-1] / N
    return np.column_stack(
        (
            np.interp(targets, arclength, closed[:, 0]),
            np.interp(targets, arclength, closed[:, 1]),
        )
    )


def tangent_angles(samples: np.ndarray) -> np.ndarray:
    """Unwrapped angles of the centred chords q_{i+1} - q_{i-1}, with the
    total turning left in the jump between the last and the first node."""
    chords = np.roll(samples, -1, axis=0) - np.roll(samples, 1, axis=0)
    angles = np.arctan2(chords[:, 1], chords[:, 0])
    return np.unwrap(angles)


def turning_number(theta: np.ndarray) -> int:
    """Rotation index of the closed curve with unwrapped nodal angles `theta`"""
    last_step = np.angle(np.exp(1j * (theta[0] - theta[-1])))
    return int(round((theta[-1] - theta[0] + last_step) / (2.0 * np.pi)))


def state_from_polyline(
    points: np.ndarray, params: ModelParams, grid: Grid, project: bool = True
) -> State:
    """
    Angles of a closed polyline resampled by arc length on `grid`, with ρ ≡ ν.
    The polyline is used up to scale; its turning number must equal ω.
    """
    theta = tangent_angles(resample_closed_polyline(points, grid.N))
    omega = turning_number(theta)
    if omega != params.omega:
        raise InfeasibleInitialState(
            f"Polyline has turning number {omega}, the model expects {params.omega}"
        )
    state = State(theta, np.full(grid.N, params.nu))
    if project:
        return project_to_constraints(state, params, grid)
    return state
