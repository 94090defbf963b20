from enum import Enum
from typing import Optional, Tuple

import numpy as np

from elastica.core.config import config
from elastica.geometry.curvature import curvature
from elastica.model.grid import Grid, State
from elastica.schemas.model_params import ModelParams


class Classification(Enum):
    """Kinds of limits a flow run or a stationary solve can end in"""

    homogeneous_circle = "HomogeneousCircle"
    figure_eight_like = "FigureEightLike"
    nontrivial_density = "NontrivialDensity"
    unclassified = "Unclassified"


def elastica_residual(state: State, grid: Grid, omega: int) -> Tuple[float, float]:
    """
    ‖κ'' + κ³/2 - λκ‖_∞ with λ fitted by least squares, and the fitted λ.
    κ'' is the periodic second difference of the centered curvature.
    """
    kappa = curvature(state, grid, omega)
    second = (np.roll(kappa, -1) - 2.0 * kappa + np.roll(kappa, 1)) / grid.ds**2
    target = second + 0.5 * kappa**3
    norm = float(kappa @ kappa)
    lam = float(kappa @ target) / norm if norm > 0 else 0.0
    return float(np.max(np.abs(target - lam * kappa))), lam


def classify_state(
    state: State, params: ModelParams, grid: Grid, tol: Optional[float] = None
) -> Classification:
    """Classification of a (converged) state, see `classify_limit`."""
    tol = config.diagnostics.CLASSIFICATION_TOL if tol is None else tol
    kappa = curvature(state, grid, params.omega)
    density_deviation = float(np.max(np.abs(state.rho - params.nu)))
    if density_deviation > tol:
        return Classification.nontrivial_density
    if params.omega != 0:
        circle_curvature = 2.0 * np.pi * params.omega / params.L
        if float(np.max(np.abs(kappa - circle_curvature))) <= tol:
            return Classification.homogeneous_circle
        return Classification.unclassified
    residual, _ = elastica_residual(state, grid, params.omega)
    scale = max(1.0, float(np.max(np.abs(kappa))) ** 3)
    if residual <= tol * scale:
        return Classification.figure_eight_like
    return Classification.unclassified
