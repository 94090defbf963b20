"""
Discrete constraints, ordered (mass, sin closure, cos closure):

    Ĝ(θ̂, ρ̂) = ( Δs Σ ρ_i - νL,  Δs Σ sin θ_i,  Δs Σ cos θ_i )
"""
import numpy as np
import scipy.sparse as sparse

from elastica.model.grid import Grid, Multipliers, State
from elastica.schemas.model_params import ModelParams

N_CONSTRAINTS = 3


def discrete_constraints(state: State, params: ModelParams, grid: Grid) -> np.ndarray:
    """Ĝ as a 3-vector"""
    state.check_grid(grid)
    return np.array(
        [
            grid.ds * np.sum(state.rho) - params.nu * params.L,
            grid.ds * np.sum(np.sin(state.theta)),
            grid.ds * np.sum(np.cos(state.theta)),
        ]
    )


def constraint_jacobian(state: State, grid: Grid) -> np.ndarray:
    """DĜ, a dense 3×2N matrix; θ block first, ρ block second."""
    state.check_grid(grid)
    N = grid.N
    jacobian = np.zeros((N_CONSTRAINTS, 2 * N))
    jacobian[0, N:] = grid.ds
    jacobian[1, :N] = grid.ds * np.cos(state.theta)
    jacobian[2, :N] = -grid.ds * np.sin(state.theta)
    return jacobian


def constraint_hessian_contraction(
    state: State, multipliers: Multipliers, grid: Grid
) -> sparse.dia_matrix:
    """Λ·D²Ĝ; only the closure constraints are nonlinear and their Hessians are
    diagonal in the θ block."""
    state.check_grid(grid)
    theta_diag = grid.ds * (
        -multipliers.sin_closure * np.sin(state.theta)
        - multipliers.cos_closure * np.cos(state.theta)
    )
    return sparse.diags(np.concatenate((theta_diag, np.zeros(grid.N))))
