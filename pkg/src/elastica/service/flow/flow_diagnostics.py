"""Per-step diagnostics written to the trace of a flow run."""
import math
from collections import OrderedDict
from typing import Optional

import numpy as np

from elastica.common_exceptions import DegenerateEdge, SingularPi
from elastica.geometry.curvature import count_sign_changes, count_zeros, curvature
from elastica.geometry.curve import reconstruct_curve
from elastica.geometry.embedding import is_embedded
from elastica.geometry.multipliers import continuous_multipliers
from elastica.geometry.symmetry import axial_residual, rotational_residual
from elastica.model.constraints import discrete_constraints
from elastica.model.energy import energy_split
from elastica.model.grid import Grid, Multipliers, State
from elastica.schemas.model_params import ModelParams
from elastica.service.flow.flow_observer import Row

TRACE_COLUMNS = [
    "step",
    "t",
    "tau",
    "newton_iters",
    "E",
    "E_theta",
    "E_rho",
    "G_mass",
    "G_sin",
    "G_cos",
    "lambda_mass",
    "lambda_sin",
    "lambda_cos",
    "lth1",
    "lth2",
    "lrho",
    "min_kappa",
    "max_kappa",
    "sign_changes",
    "zeros",
    "rho_min",
    "rho_max",
    "rho_var",
    "rot_residual",
    "axial_residual",
    "embedded",
    "min_abs_kappa",
    "theta_mean",
    "residual_norm",
    "rejections",
]


def density_variance(state: State, params: ModelParams, grid: Grid) -> float:
    """‖ρ - ν‖² in the Δs-weighted norm"""
    return float(grid.ds * np.sum((state.rho - params.nu) ** 2))


def trace_row(  # pylint: disable=too-many-arguments,too-many-locals
    step: int,
    t: float,
    tau: float,
    state: State,
    multipliers: Multipliers,
    params: ModelParams,
    grid: Grid,
    symmetry_k: Optional[int] = None,
    newton_iters: int = 0,
    residual_norm: float = 0.0,
    rejections: int = 0,
    with_geometry: bool = True,
) -> Row:
    """
    One trace row. The quadratic cost columns (rot_residual, axial_residual,
    embedded) are left empty unless `with_geometry` is set.
    """
    split = energy_split(state, params, grid)
    constraints = discrete_constraints(state, params, grid)
    kappa = curvature(state, grid, params.omega)
    try:
        continuous = continuous_multipliers(state, params, grid)
        lth1, lth2, lrho = (
            continuous.lambda_theta1,
            continuous.lambda_theta2,
            continuous.lambda_rho,
        )
    except SingularPi:
        lth1 = lth2 = lrho = math.nan

    rot = axial = math.nan
    embedded: Optional[bool] = None
    if with_geometry:
        rot = rotational_residual(state, grid, symmetry_k or 1, params.omega)
        axial = axial_residual(state, grid, params.omega)
        try:
            embedded = is_embedded(reconstruct_curve(state, grid, params.omega))
        except DegenerateEdge:
            embedded = None

    row: Row = OrderedDict(
        step=step,
        t=t,
        tau=tau,
        newton_iters=newton_iters,
        E=split.total,
        E_theta=split.theta,
        E_rho=split.rho,
        G_mass=float(constraints[0]),
        G_sin=float(constraints[1]),
        G_cos=float(constraints[2]),
        lambda_mass=multipliers.mass,
        lambda_sin=multipliers.sin_closure,
        lambda_cos=multipliers.cos_closure,
        lth1=lth1,
        lth2=lth2,
        lrho=lrho,
        min_kappa=float(np.min(kappa)),
        max_kappa=float(np.max(kappa)),
        sign_changes=count_sign_changes(kappa),
        zeros=count_zeros(kappa),
        rho_min=float(np.min(state.rho)),
        rho_max=float(np.max(state.rho)),
        rho_var=density_variance(state, params, grid),
        rot_residual=rot,
        axial_residual=axial,
        embedded=embedded,
        min_abs_kappa=float(np.min(np.abs(kappa))),
        theta_mean=float(grid.ds * np.sum(state.theta)),
        residual_norm=residual_norm,
        rejections=rejections,
    )
    return row
