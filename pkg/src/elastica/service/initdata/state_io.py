"""
State files: UTF-8 CSV with header `i,s,theta,rho`, one row per node, LF line
endings and 17 significant digits. Snapshot files append `kappa,x,y`.
"""
import logging
from typing import Optional

import numpy as np
import pandas as pd

from elastica.common_exceptions import DimensionMismatch, FormatError
from elastica.geometry.curvature import curvature
from elastica.geometry.curve import Centering, reconstruct_curve
from elastica.model.grid import Grid, State
from elastica.schemas.model_params import ModelParams
from elastica.service.initdata.projection import project_to_constraints

logger = logging.getLogger(__name__)

STATE_COLUMNS = ["i", "s", "theta", "rho"]
SNAPSHOT_COLUMNS = STATE_COLUMNS + ["kappa", "x", "y"]
FLOAT_FORMAT = "%.17g"


def write_csv(frame: pd.DataFrame, path: str) -> None:
    """Shared CSV convention for every file a run writes"""
    frame.to_csv(
        path, index=False, encoding="utf-8", float_format=FLOAT_FORMAT, lineterminator="\n"
    )


def state_frame(state: State, grid: Grid) -> pd.DataFrame:
    state.check_grid(grid)
    return pd.DataFrame(
        {"i": np.arange(grid.N), "s": grid.s, "theta": state.theta, "rho": state.rho},
        columns=STATE_COLUMNS,
    )


def snapshot_frame(state: State, grid: Grid, omega: int) -> pd.DataFrame:
    """State columns plus the curvature and the reconstructed curve"""
    frame = state_frame(state, grid)
    points = reconstruct_curve(state, grid, omega, Centering.from_integral).vertices
    frame["kappa"] = curvature(state, grid, omega)
    frame["x"] = points[:, 0]
    frame["y"] = points[:, 1]
    return frame


def save_state(state: State, path: str, grid: Grid) -> None:
    write_csv(state_frame(state, grid), path)
    logger.debug("Saved state with %s nodes", grid.N)


def load_state(
    path: str,
    grid: Grid,
    params: Optional[ModelParams] = None,
    project: bool = False,
) -> State:
    """
    Read a state or snapshot file. The node count must match the grid;
    with `project` the state is moved onto the constraints of `params`.
    """
    try:
        frame = pd.read_csv(path, encoding="utf-8", float_precision="round_trip")
    except (pd.errors.ParserError, pd.errors.EmptyDataError, UnicodeDecodeError) as exc:
        raise FormatError(f"Could not parse state file {path}: {exc}")
    columns = list(frame.columns)
    if columns not in (STATE_COLUMNS, SNAPSHOT_COLUMNS):
        raise FormatError(
            f"State file {path} has columns {columns}, expected {STATE_COLUMNS}"
        )
    if len(frame) != grid.N:
        raise DimensionMismatch(f"State file has {len(frame)} rows, grid has {grid.N} nodes")
    try:
        values = frame[STATE_COLUMNS].apply(pd.to_numeric, errors="raise")
    except (ValueError, TypeError) as exc:
        raise FormatError(f"State file {path} contains non-numeric values: {exc}")
    if not np.array_equal(values["i"].to_numpy(), np.arange(grid.N)):
        raise FormatError("Node indices must run from 0 to N-1 in order")
    theta = values["theta"].to_numpy(dtype=float)
    rho = values["rho"].to_numpy(dtype=float)
    if not (np.all(np.isfinite(theta)) and np.all(np.isfinite(rho))):
        raise FormatError("State file contains non-finite values")

    state = State(theta, rho)
    if project:
        if params is None:
            raise ValueError("Projection needs the model parameters")
        return project_to_constraints(state, params, grid)
    return state
