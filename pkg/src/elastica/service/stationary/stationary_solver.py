"""
Newton solver for constrained critical points,

    ∇Ê(η) + DĜ(η)ᵀΛ = 0,   Ĝ(η) = 0,

and the pointwise Euler-Lagrange residual of a given state.

The energy and the constraints are invariant under θ ↦ θ + α, so the bare KKT
matrix is singular at every feasible point. The solver adds the gauge row
Δs Σ θ_i = const; its multiplier vanishes at critical points.
"""
import logging
from typing import Optional, Tuple

import numpy as np
import scipy.sparse as sparse
from scipy.sparse import linalg

from elastica.common_exceptions import (
    ElasticaException,
    NewtonDivergence,
    SingularKKT,
)
from elastica.core.config import config
from elastica.model.constraints import (
    constraint_hessian_contraction,
    constraint_jacobian,
    discrete_constraints,
)
from elastica.model.energy import discrete_gradient, energy_hessian
from elastica.model.grid import Grid, Multipliers, State
from elastica.schemas.model_params import ModelParams
from elastica.service.stationary.classification import Classification, classify_state

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-9
FEASIBLE_GUESS_TOL = 1e-6


class CriticalPoint:
    """A solution of the discrete Euler-Lagrange system"""

    def __init__(
        self,
        state: State,
        multipliers: Multipliers,
        residual_norm: float,
        classification: Classification = Classification.unclassified,
        iterations: int = 0,
    ):
        self.state = state
        self.multipliers = multipliers
        self.residual_norm = residual_norm
        self.classification = classification
        self.iterations = iterations

    def __repr__(self) -> str:
        return (
            f"CriticalPoint({self.classification.value}, residual={self.residual_norm:.3e}, "
            f"iterations={self.iterations})"
        )


class StationaryResidual:
    """Pointwise Euler-Lagrange residual with least-squares multipliers"""

    def __init__(self, euler_lagrange: float, constraints: float, multipliers: Multipliers):
        self.euler_lagrange = euler_lagrange
        self.constraints = constraints
        self.multipliers = multipliers

    @property
    def total(self) -> float:
        return max(self.euler_lagrange, self.constraints)


def fit_multipliers(state: State, params: ModelParams, grid: Grid) -> Multipliers:
    """Λ minimizing ‖∇Ê + DĜᵀΛ‖"""
    jacobian = constraint_jacobian(state, grid)
    gradient = discrete_gradient(state, params, grid)
    values, *_ = np.linalg.lstsq(jacobian.T, -gradient, rcond=None)
    return Multipliers.from_array(values)


def _residuals(
    state: State, multipliers: Multipliers, params: ModelParams, grid: Grid
) -> Tuple[np.ndarray, np.ndarray]:
    lagrangian_gradient = discrete_gradient(state, params, grid) + (
        constraint_jacobian(state, grid).T @ multipliers.values
    )
    return lagrangian_gradient, discrete_constraints(state, params, grid)


def stationary_residual(
    state: State, params: ModelParams, grid: Grid
) -> StationaryResidual:
    """‖(∇Ê + DĜᵀΛ)/Δs‖_∞ and ‖Ĝ‖_∞ for the best fitting Λ."""
    multipliers = fit_multipliers(state, params, grid)
    lagrangian_gradient, constraints = _residuals(state, multipliers, params, grid)
    return StationaryResidual(
        euler_lagrange=float(np.max(np.abs(lagrangian_gradient))) / grid.ds,
        constraints=float(np.max(np.abs(constraints))),
        multipliers=multipliers,
    )


def _norm(lagrangian_gradient: np.ndarray, constraints: np.ndarray, grid: Grid) -> float:
    return max(
        float(np.max(np.abs(lagrangian_gradient))) / grid.ds,
        float(np.max(np.abs(constraints))),
    )


def _stationary_kkt(
    state: State, multipliers: Multipliers, params: ModelParams, grid: Grid
) -> sparse.csc_matrix:
    hessian = energy_hessian(state, params, grid) + constraint_hessian_contraction(
        state, multipliers, grid
    )
    gauge = np.zeros((1, 2 * grid.N))
    gauge[0, : grid.N] = grid.ds
    border = sparse.csr_matrix(np.vstack((constraint_jacobian(state, grid), gauge)))
    return sparse.bmat([[hessian, border.T], [border, None]], format="csc")


def solve_stationary(
    guess: State,
    params: ModelParams,
    grid: Grid,
    tol: Optional[float] = None,
    max_iter: Optional[int] = None,
) -> CriticalPoint:
    """Newton's method on the first order optimality conditions, started at
    `guess` with least-squares multipliers.

    Never returns a point with residual above `tol`: failure to converge is
    reported as NewtonDivergence, a singular system as SingularKKT.
    """
    tol = DEFAULT_TOL if tol is None else tol
    max_iter = config.solver.NEWTON_MAX_ITER if max_iter is None else max_iter
    guess.check_grid(grid)
    violation = float(np.max(np.abs(discrete_constraints(guess, params, grid))))
    if violation > FEASIBLE_GUESS_TOL:
        logger.warning("Stationary solve started from an infeasible guess (%.3e)", violation)

    state = guess
    multipliers = fit_multipliers(state, params, grid)
    lagrangian_gradient, constraints = _residuals(state, multipliers, params, grid)
    norm = _norm(lagrangian_gradient, constraints, grid)
    initial_norm = max(norm, tol)
    iteration = 0
    while norm > tol:
        if iteration == max_iter:
            raise NewtonDivergence(
                f"No convergence after {max_iter} iterations, residual {norm:.3e}"
            )
        matrix = _stationary_kkt(state, multipliers, params, grid)
        rhs = -np.concatenate((lagrangian_gradient, constraints, [0.0]))
        try:
            delta = linalg.splu(matrix).solve(rhs)
        except RuntimeError as exc:
            raise SingularKKT(f"Stationary KKT matrix is singular: {exc}")
        if not np.all(np.isfinite(delta)):
            raise SingularKKT("Stationary KKT solve produced non-finite values")
        try:
            state = State.from_eta(state.eta + delta[: 2 * grid.N])
            multipliers = Multipliers.from_array(
                multipliers.values + delta[2 * grid.N : 2 * grid.N + 3]
            )
            lagrangian_gradient, constraints = _residuals(state, multipliers, params, grid)
        except ElasticaException as exc:
            raise NewtonDivergence(f"Newton iterate left the admissible set: {exc}")
        norm = _norm(lagrangian_gradient, constraints, grid)
        iteration += 1
        logger.debug("Stationary Newton iteration %s residual %.3e", iteration, norm)
        if not np.isfinite(norm) or norm > config.solver.DIVERGENCE_FACTOR * initial_norm:
            raise NewtonDivergence(f"Residual grew from {initial_norm:.3e} to {norm:.3e}")

    critical_point = CriticalPoint(state, multipliers, norm, iterations=iteration)
    critical_point.classification = classify_limit(critical_point, params, grid)
    return critical_point


def classify_limit(
    cp: CriticalPoint, params: ModelParams, grid: Grid, tol: Optional[float] = None
) -> Classification:
    """
    HomogeneousCircle: ω ≠ 0, κ ≡ 2πω/L and ρ ≡ ν to tol.
    FigureEightLike: ω = 0, ρ ≡ ν and the elastica residual below tol·scale.
    NontrivialDensity: ρ deviates from ν by more than tol.
    Unclassified otherwise.
    """
    return classify_state(cp.state, params, grid, tol)
