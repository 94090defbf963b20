import logging
from typing import Optional

import numpy as np

from elastica.common_exceptions import ProjectionFailure
from elastica.model.constraints import constraint_jacobian, discrete_constraints
from elastica.model.grid import Grid, State
from elastica.schemas.model_params import ModelParams

logger = logging.getLogger(__name__)

DEFAULT_PROJECTION_TOL = 1e-12
MAX_PROJECTION_ITER = 100


def project_to_constraints(
    state: State,
    params: ModelParams,
    grid: Grid,
    tol: Optional[float] = None,
) -> State:
    """
    Gauss-Newton for min ‖η - η_input‖² subject to Ĝ(η) = 0: repeat the
    minimum norm correction η ← η - DĜᵀ(DĜ DĜᵀ)⁻¹ Ĝ(η) until ‖Ĝ‖_∞ ≤ tol.
    """
    tol = DEFAULT_PROJECTION_TOL if tol is None else tol
    state.check_grid(grid)
    eta = state.eta
    for iteration in range(MAX_PROJECTION_ITER + 1):
        current = State.from_eta(eta)
        constraints = discrete_constraints(current, params, grid)
        violation = float(np.max(np.abs(constraints)))
        if violation <= tol:
            logger.debug("Projected onto the constraints in %s iterations", iteration)
            return current if iteration else state
        if iteration == MAX_PROJECTION_ITER:
            break
        jacobian = constraint_jacobian(current, grid)
        try:
            correction = np.linalg.solve(jacobian @ jacobian.T, constraints)
        except np.linalg.LinAlgError:
            raise ProjectionFailure(
                "Constraint Jacobian is rank deficient; the state is too far from a closed curve"
            )
        eta = eta - jacobian.T @ correction
        if not np.all(np.isfinite(eta)):
            raise ProjectionFailure("Projection produced non-finite values")
    raise ProjectionFailure(
        f"No feasible state after {MAX_PROJECTION_ITER} iterations (violation {violation:.3e})"
    )

