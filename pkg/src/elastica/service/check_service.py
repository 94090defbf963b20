import math
from typing import Any, Dict, Optional

import numpy as np

from elastica.common_exceptions import DegenerateEdge, SingularPi
from elastica.geometry.curvature import count_sign_changes, count_zeros, curvature
from elastica.geometry.curve import reconstruct_curve
from elastica.geometry.embedding import embeddedness_threshold, is_embedded
from elastica.geometry.multipliers import continuous_multipliers
from elastica.geometry.symmetry import symmetry_residuals
from elastica.model.constraints import discrete_constraints
from elastica.model.energy import energy_split
from elastica.model.grid import Grid, State
from elastica.schemas.model_params import ModelParams
from elastica.service.stationary.classification import classify_state
from elastica.service.stationary.stationary_solver import stationary_residual


def _finite_or_none(value: float) -> Optional[float]:
    return None if math.isnan(value) else float(value)


def state_report(
    state: State, params: ModelParams, grid: Grid, symmetry_k: Optional[int] = None
) -> Dict[str, Any]:
    """Every diagnostic of a single state, JSON friendly."""
    split = energy_split(state, params, grid)
    constraints = discrete_constraints(state, params, grid)
    kappa = curvature(state, grid, params.omega)
    curve = reconstruct_curve(state, grid, params.omega)

    try:
        continuous = continuous_multipliers(state, params, grid)
        lambda_theta: Any = [continuous.lambda_theta1, continuous.lambda_theta2]
        lambda_rho: Optional[float] = continuous.lambda_rho
    except SingularPi:
        lambda_theta, lambda_rho = None, None
    try:
        embedded: Optional[bool] = is_embedded(curve)
    except DegenerateEdge:
        embedded = None

    symmetry = symmetry_residuals(state, grid, symmetry_k or 1, params.omega)
    residual = stationary_residual(state, params, grid)
    rho_interval = (float(np.min(state.rho)), float(np.max(state.rho)))
    return {
        "energy": split.total,
        "E_theta": split.theta,
        "E_rho": split.rho,
        "constraints": {
            "mass": float(constraints[0]),
            "sin": float(constraints[1]),
            "cos": float(constraints[2]),
        },
        "continuous_multipliers": {"lambda_theta": lambda_theta, "lambda_rho": lambda_rho},
        "discrete_multipliers": list(residual.multipliers.as_tuple()),
        "stationary_residual": residual.euler_lagrange,
        "kappa": {
            "min": float(np.min(kappa)),
            "max": float(np.max(kappa)),
            "min_abs": float(np.min(np.abs(kappa))),
            "zeros": count_zeros(kappa),
            "sign_changes": count_sign_changes(kappa),
        },
        "symmetry": {
            "k": symmetry.k,
            "rot_residual": _finite_or_none(symmetry.rot_residual),
            "axial_residual": _finite_or_none(symmetry.axial_residual),
        },
        "closure_defect": curve.closure_defect,
        "embedded": embedded,
        "embeddedness_threshold": embeddedness_threshold(params, rho_interval),
        "rho_interval": list(rho_interval),
        "classification": classify_state(state, params, grid).value,
    }
