import logging

import numpy as np

from elastica.common_exceptions import SingularPi
from elastica.core.config import config
from elastica.model.grid import Grid, State
from elastica.model.operators import centered_curvature
from elastica.schemas.model_params import ModelParams

logger = logging.getLogger(__name__)


class ContinuousMultipliers:
    """λθ1, λθ2 and λρ of the continuous flow, evaluated on a discrete state."""

    def __init__(
        self, lambda_theta1: float, lambda_theta2: float, lambda_rho: float, pi: np.ndarray
    ):
        self.lambda_theta1 = float(lambda_theta1)
        self.lambda_theta2 = float(lambda_theta2)
        self.lambda_rho = float(lambda_rho)
        self.pi = pi

    @property
    def lambda_theta(self) -> np.ndarray:
        return np.array([self.lambda_theta1, self.lambda_theta2])

    def __repr__(self) -> str:
        return (
            f"ContinuousMultipliers(lth1={self.lambda_theta1:.6g}, "
            f"lth2={self.lambda_theta2:.6g}, lrho={self.lambda_rho:.6g})"
        )


def pi_matrix(state: State, grid: Grid) -> np.ndarray:
    """Gram matrix of (sin θ, -cos θ) under the Δs-weighted nodal sum"""
    sin = np.sin(state.theta)
    cos = np.cos(state.theta)
    off = -grid.ds * np.sum(sin * cos)
    return np.array(
        [[grid.ds * np.sum(sin**2), off], [off, grid.ds * np.sum(cos**2)]]
    )


def continuous_multipliers(
    state: State, params: ModelParams, grid: Grid
) -> ContinuousMultipliers:
    """
    (λθ1, λθ2) = Π⁻¹ ∫ (cos θ, sin θ) κ β(ρ)(κ - c0) ds
    λρ = -1/(2L) ∫ β'(ρ)(κ - c0)² ds
    with κ the centered curvature and ∫ the Δs-weighted nodal sum.
    """
    state.check_grid(grid)
    pi = pi_matrix(state, grid)
    determinant = np.linalg.det(pi)
    scale = (np.trace(pi) / 2.0) ** 2
    if abs(determinant) < config.diagnostics.SINGULAR_PI_FACTOR * scale:
        raise SingularPi(
            f"Pi is singular (det={determinant:.3e}); the state does not describe a closed curve"
        )
    kappa = centered_curvature(state.theta, grid, params.omega)
    excess = kappa - params.c0
    flux = kappa * params.beta.positive_value(state.rho) * excess
    moments = grid.ds * np.array(
        [np.sum(np.cos(state.theta) * flux), np.sum(np.sin(state.theta) * flux)]
    )
    lambda_theta = np.linalg.solve(pi, moments)
    lambda_rho = -grid.ds * np.sum(
        params.beta.first_derivative(state.rho) * excess**2
    ) / (2.0 * params.L)
    return ContinuousMultipliers(lambda_theta[0], lambda_theta[1], lambda_rho, pi)
