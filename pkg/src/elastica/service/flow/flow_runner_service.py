import logging
from enum import Enum
from typing import List, Optional

import numpy as np
import pandas as pd

from elastica.common_exceptions import (
    InfeasibleInitialState,
    LinearSolveFailure,
    NewtonDivergence,
    NonpositiveStiffness,
    SingularPi,
    StepStalled,
)
from elastica.core.config import config
from elastica.geometry.multipliers import continuous_multipliers
from elastica.geometry.symmetry import check_symmetry_order, rotational_residual
from elastica.model.constraints import discrete_constraints
from elastica.model.grid import Grid, Multipliers, State
from elastica.schemas.flow_config import FlowConfig
from elastica.schemas.model_params import ModelParams
from elastica.service.flow.flow_diagnostics import TRACE_COLUMNS, trace_row
from elastica.service.flow.flow_observer import FlowObserver, InMemoryObserver, Row
from elastica.service.flow.minimizing_movement import StepResult, mm_step
from elastica.service.flow.symmetry_projection import project_symmetry
from elastica.service.flow.time_step import adapt_tau, clamp_tau, halve_tau
from elastica.util.logger import Verbatim

logger = logging.getLogger(__name__)


class StopReason(Enum):
    """Why a flow run ended"""

    t_final = "t_final"
    stationary = "stationary"
    max_steps = "max_steps"


class Snapshot:
    """A recorded state along the flow together with its trace row"""

    def __init__(self, index: int, state: State, row: Row):
        self.index = index
        self.state = state
        self.row = row

    @property
    def t(self) -> float:
        return float(self.row["t"])


class Trajectory:
    """Snapshots and trace rows of a finished run. len() counts snapshots."""

    def __init__(self) -> None:
        self.snapshots: List[Snapshot] = []
        self.rows: List[Row] = []
        self.final_state: Optional[State] = None
        self.final_multipliers: Optional[Multipliers] = None
        self.stop_reason: Optional[StopReason] = None

    @property
    def trace(self) -> pd.DataFrame:
        return pd.DataFrame(self.rows, columns=TRACE_COLUMNS)

    def __len__(self) -> int:
        return len(self.snapshots)

    def __repr__(self) -> str:
        return f"Trajectory(snapshots={len(self)}, steps={len(self.rows)}, stop={self.stop_reason})"


class _Recorder:
    """Fans rows and snapshots out to the trajectory and the observer"""

    def __init__(self, trajectory: Trajectory, observer: FlowObserver):
        self.trajectory = trajectory
        self.observer = observer

    def step(self, row: Row) -> None:
        self.trajectory.rows.append(row)
        self.observer.on_step(row)

    def snapshot(self, state: State, row: Row) -> None:
        index = len(self.trajectory.snapshots)
        self.trajectory.snapshots.append(Snapshot(index, state, row))
        self.observer.on_snapshot(index, state, row)
        logger.info(
            "Snapshot %s at step %s, t=%.6g, E=%.12g",
            index,
            row["step"],
            row["t"],
            row["E"],
        )


def initial_multipliers(state: State, params: ModelParams, grid: Grid) -> Multipliers:
    """Warm start from the continuous multipliers, zero if Π is singular.

    The discrete rows pair as mass ↔ λρ, sin closure ↔ λθ2, cos closure ↔ λθ1.
    """
    try:
        continuous = continuous_multipliers(state, params, grid)
    except SingularPi:
        return Multipliers()
    return Multipliers(
        mass=continuous.lambda_rho,
        sin_closure=continuous.lambda_theta2,
        cos_closure=continuous.lambda_theta1,
    )


def validate_initial_state(
    initial: State, params: ModelParams, grid: Grid, cfg: FlowConfig
) -> None:
    """Raise InfeasibleInitialState unless the constraints (and the requested
    symmetry) hold to FEASIBILITY_TOL."""
    initial.check_grid(grid)
    tol = config.diagnostics.FEASIBILITY_TOL
    violation = float(np.max(np.abs(discrete_constraints(initial, params, grid))))
    if violation > tol:
        raise InfeasibleInitialState(
            f"Initial state violates the constraints by {violation:.3e} > {tol:.1e}"
        )
    if cfg.symmetry_k:
        check_symmetry_order(cfg.symmetry_k, grid)
        residual = rotational_residual(initial, grid, cfg.symmetry_k, params.omega)
        if residual > tol:
            raise InfeasibleInitialState(
                f"Initial state is not {cfg.symmetry_k}-fold symmetric (residual {residual:.3e})"
            )


def _attempt_step(
    state: State,
    multipliers: Multipliers,
    tau: float,
    cfg: FlowConfig,
    params: ModelParams,
    grid: Grid,
) -> Optional[StepResult]:
    try:
        result = mm_step(state, multipliers, tau, cfg, params, grid)
    except (NewtonDivergence, LinearSolveFailure, NonpositiveStiffness) as exc:
        logger.warning(
            "Step with tau=%.3e failed: %s", tau, Verbatim(type(exc).__name__)
        )
        return None
    if not result.accepted:
        logger.warning(
            "Step with tau=%.3e rejected after %s Newton iterations",
            tau,
            result.newton_iters,
        )
        return None
    return result


def run_flow(  # pylint: disable=too-many-locals
    initial: State,
    params: ModelParams,
    grid: Grid,
    cfg: FlowConfig,
    observer: Optional[FlowObserver] = None,
) -> Trajectory:
    """
    Integrate the flow from `initial` until t_final, stationarity or max_steps.

    A rejected step halves τ and is retried; after max_rejections consecutive
    rejections StepStalled is raised. A step whose increment satisfies
    ‖Δη‖_∞/τ < stationarity_eps ends the run and is not committed.
    """
    validate_initial_state(initial, params, grid, cfg)
    trajectory = Trajectory()
    recorder = _Recorder(trajectory, observer or InMemoryObserver())

    state = initial.copy()
    multipliers = initial_multipliers(state, params, grid)
    t = 0.0
    tau = clamp_tau(cfg.tau0, cfg)
    step = 0
    last_snapshot_step = 0
    rejections = 0

    row = trace_row(step, t, tau, state, multipliers, params, grid, cfg.symmetry_k)
    recorder.step(row)
    recorder.snapshot(state, row)

    stop_reason = StopReason.t_final
    while t < cfg.t_final:
        if cfg.max_steps is not None and step >= cfg.max_steps:
            stop_reason = StopReason.max_steps
            break
        result = _attempt_step(state, multipliers, tau, cfg, params, grid)
        if result is None:
            rejections += 1
            if rejections >= cfg.max_rejections:
                raise StepStalled(
                    f"{rejections} consecutive rejected steps at t={t:.6g}, tau={tau:.3e}"
                )
            tau = halve_tau(tau, cfg)
            continue

        new_state = result.state
        if cfg.symmetry_k:
            new_state = project_symmetry(
                new_state, state, cfg.symmetry_k, grid, params.omega, cfg.symmetry_mode
            )
        increment = float(np.max(np.abs(new_state.eta - state.eta)))
        if increment / tau < cfg.stationarity_eps:
            stop_reason = StopReason.stationary
            logger.info("Stationary at t=%.6g after %s steps", t, step)
            break

        state = new_state
        multipliers = result.multipliers
        t += tau
        step += 1
        row = trace_row(
            step,
            t,
            tau,
            state,
            multipliers,
            params,
            grid,
            cfg.symmetry_k,
            newton_iters=result.newton_iters,
            residual_norm=result.residual_norm,
            rejections=rejections,
            with_geometry=step % cfg.diagnostics_every == 0,
        )
        rejections = 0
        recorder.step(row)
        if step % cfg.snapshot_every == 0:
            recorder.snapshot(state, row)
            last_snapshot_step = step
        tau = adapt_tau(tau, increment, cfg)

    if step != last_snapshot_step:
        recorder.snapshot(state, trajectory.rows[-1])
    trajectory.final_state = state
    trajectory.final_multipliers = multipliers
    trajectory.stop_reason = stop_reason
    return trajectory
