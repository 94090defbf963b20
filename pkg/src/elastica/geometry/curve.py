from enum import Enum

import numpy as np

from elastica.model.grid import Grid, State


class Centering(Enum):
    """Where the reconstructed curve is placed in the plane"""

    from_integral = "from_integral"  # ∫γ ds = 0
    at_origin = "at_origin"  # γ(0) = 0


class Curve:
    """Polyline γ_0, ..., γ_N. The closure defect is reported, never repaired."""

    def __init__(self, points: np.ndarray):
        self.points = np.asarray(points, dtype=float)
        self.closure_defect = float(np.linalg.norm(self.points[-1] - self.points[0]))

    @property
    def vertices(self) -> np.ndarray:
        """γ_0, ..., γ_{N-1}, the closed polyline read cyclically"""
        return self.points[:-1]

    @property
    def length(self) -> float:
        return float(np.sum(np.linalg.norm(np.diff(self.points, axis=0), axis=1)))

    def __repr__(self) -> str:
        return f"Curve(N={len(self.points) - 1}, closure_defect={self.closure_defect:.3e})"


def reconstruct_curve(
    state: State,
    grid: Grid,
    omega: int,
    centering: Centering = Centering.from_integral,
) -> Curve:
    """γ(s) = γ(0) + ∫_0^s (cos θ, sin θ) dr by cumulative trapezoidal quadrature.

    With `from_integral` the Δs-weighted nodal mean of γ_0..γ_{N-1} is
    removed, the discrete counterpart of choosing γ(0) = (1/L)∫ s (cos θ, sin θ) ds.
    """
    state.check_grid(grid)
    theta = np.append(state.theta, state.theta[0] + 2.0 * np.pi * omega)
    tangents = np.column_stack((np.cos(theta), np.sin(theta)))
    increments = 0.5 * grid.ds * (tangents[:-1] + tangents[1:])
    points = np.vstack((np.zeros((1, 2)), np.cumsum(increments, axis=0)))
    if centering == Centering.from_integral:
        points -= points[:-1].mean(axis=0)
    return Curve(points)
