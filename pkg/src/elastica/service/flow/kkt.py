"""
Bordered KKT system of one Newton iteration of the minimizing movement

    min_η  1/(2τ) ‖η - η^n‖²_Δs + Ê(η)   s.t.  Ĝ(η) = 0

With w = τ/Δs the Newton update (δη, δΛ) solves

    [ I + w(∇²Ê + Λ·D²Ĝ)   w DĜᵀ ] [δη]   [ -(η^j - η^n) - w(∇Ê + DĜᵀΛ^j) ]
    [ w DĜ                  0    ] [δΛ] = [ -w Ĝ(η^j)                      ]

The constraint row drives Ĝ back to zero and vanishes at feasible iterates.
"""
import logging
from typing import Tuple

import numpy as np
import scipy.sparse as sparse
from scipy.sparse import linalg

from elastica.common_exceptions import LinearSolveFailure
from elastica.model.constraints import (
    constraint_hessian_contraction,
    constraint_jacobian,
    discrete_constraints,
)
from elastica.model.energy import discrete_gradient, energy_hessian
from elastica.model.grid import Grid, Multipliers, State
from elastica.schemas.model_params import ModelParams

logger = logging.getLogger(__name__)


def optimality_residual(
    state_j: State,
    lambda_j: Multipliers,
    state_n: State,
    tau: float,
    params: ModelParams,
    grid: Grid,
) -> Tuple[np.ndarray, np.ndarray]:
    """The stationarity part (η^j - η^n) + w(∇Ê + DĜᵀΛ^j) and Ĝ(η^j)"""
    weight = tau / grid.ds
    stationarity = (state_j.eta - state_n.eta) + weight * (
        discrete_gradient(state_j, params, grid)
        + constraint_jacobian(state_j, grid).T @ lambda_j.values
    )
    return stationarity, discrete_constraints(state_j, params, grid)


def assemble_kkt(
    state_j: State,
    lambda_j: Multipliers,
    state_n: State,
    tau: float,
    params: ModelParams,
    grid: Grid,
) -> Tuple[sparse.csc_matrix, np.ndarray]:
    """KKT matrix of size 2N+3 and the matching right hand side."""
    if not tau > 0:
        raise ValueError(f"tau must be positive, got {tau}")
    state_n.check_grid(grid)
    weight = tau / grid.ds
    hessian = energy_hessian(state_j, params, grid) + constraint_hessian_contraction(
        state_j, lambda_j, grid
    )
    top_left = sparse.identity(2 * grid.N, format="csr") + weight * hessian
    border = sparse.csr_matrix(weight * constraint_jacobian(state_j, grid))
    matrix = sparse.bmat([[top_left, border.T], [border, None]], format="csc")

    stationarity, constraints = optimality_residual(
        state_j, lambda_j, state_n, tau, params, grid
    )
    # lower block is -wĜ(η_j), not zero
    rhs = -np.concatenate((stationarity, weight * constraints))
    return matrix, rhs


def solve_kkt(matrix: sparse.spmatrix, rhs: np.ndarray) -> np.ndarray:
    """Direct sparse LU solve, raising LinearSolveFailure on singular systems"""
    try:
        solution = linalg.splu(sparse.csc_matrix(matrix)).solve(rhs)
    except RuntimeError as exc:
        raise LinearSolveFailure(f"KKT factorization failed: {exc}")
    if not np.all(np.isfinite(solution)):
        raise LinearSolveFailure("KKT solve produced non-finite values")
    return solution
