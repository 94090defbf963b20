import logging
from typing import Optional

import numpy as np

from elastica.common_exceptions import ElasticaException, NewtonDivergence
from elastica.model.constraints import discrete_constraints
from elastica.model.energy import discrete_energy
from elastica.model.grid import Grid, Multipliers, State
from elastica.schemas.flow_config import FlowConfig
from elastica.schemas.model_params import ModelParams
from elastica.service.flow.kkt import assemble_kkt, optimality_residual, solve_kkt

logger = logging.getLogger(__name__)

# relative slack of the descent check
ENERGY_SLACK = 1e-12


class StepResult:
    """Outcome of one minimizing movement step"""

    def __init__(
        self,
        state: State,
        multipliers: Multipliers,
        newton_iters: int,
        residual_norm: float,
        tau_used: float,
        energy: float,
        accepted: bool,
        increment: float,
    ):
        self.state = state
        self.multipliers = multipliers
        self.newton_iters = newton_iters
        self.residual_norm = residual_norm
        self.tau_used = tau_used
        self.energy = energy
        self.accepted = accepted
        self.increment = increment

    def __repr__(self) -> str:
        return (
            f"StepResult(accepted={self.accepted}, iters={self.newton_iters}, "
            f"residual={self.residual_norm:.3e}, tau={self.tau_used:.3e})"
        )


def _lagrangian(
    state: State, multipliers: Multipliers, params: ModelParams, grid: Grid
) -> float:
    return discrete_energy(state, params, grid) + float(
        multipliers.values @ discrete_constraints(state, params, grid)
    )


def mm_step(
    state_n: State,
    lambda_warm: Multipliers,
    tau: float,
    cfg: FlowConfig,
    params: ModelParams,
    grid: Grid,
) -> StepResult:
    """
    One step of the minimizing movement, solved by Newton's method on the KKT
    conditions starting from η^n and the warm multipliers.

    The Newton loop stops when the residual norm falls below the absolute
    tolerance, when it stops changing (relative tolerance) with the
    constraints already satisfied, or after newton_max_iter iterations, in
    which case the step is not accepted. A converged step is accepted only if
    it does not increase the energy; the comparison is made on Ê + Λ·Ĝ so that
    constraint residuals at the tolerance level do not count as ascent.
    """
    tol = cfg.newton_tol_for(grid.N)
    state = state_n
    multipliers = lambda_warm
    initial_norm: Optional[float] = None
    previous_norm: Optional[float] = None
    converged = False
    norm = np.inf
    iteration = 0

    for iteration in range(cfg.newton_max_iter + 1):
        stationarity, constraints = optimality_residual(
            state, multipliers, state_n, tau, params, grid
        )
        norm = float(np.sqrt(stationarity @ stationarity + constraints @ constraints))
        logger.debug("Newton iteration %s residual %.3e", iteration, norm)
        if initial_norm is None:
            initial_norm = max(norm, tol)
        if norm <= tol:
            converged = True
            break
        if (
            previous_norm is not None
            and abs(norm - previous_norm) <= cfg.newton_tol_rel * previous_norm
            and np.max(np.abs(constraints)) <= 10 * tol
        ):
            converged = True
            break
        if not np.isfinite(norm) or norm > cfg.divergence_factor * initial_norm:
            raise NewtonDivergence(
                f"Newton residual grew from {initial_norm:.3e} to {norm:.3e}"
            )
        if iteration == cfg.newton_max_iter:
            break
        matrix, rhs = assemble_kkt(state, multipliers, state_n, tau, params, grid)
        delta = solve_kkt(matrix, rhs)
        try:
            state = State.from_eta(state.eta + delta[: 2 * grid.N])
        except ElasticaException as exc:
            raise NewtonDivergence(f"Newton iterate left the admissible set: {exc}")
        multipliers = Multipliers.from_array(multipliers.values + delta[2 * grid.N :])
        previous_norm = norm

    energy = discrete_energy(state, params, grid)
    accepted = converged
    if converged:
        before = _lagrangian(state_n, multipliers, params, grid)
        after = _lagrangian(state, multipliers, params, grid)
        if after > before + ENERGY_SLACK * (1.0 + abs(before)):
            logger.debug("Step increases the energy by %.3e", after - before)
            accepted = False

    return StepResult(
        state=state,
        multipliers=multipliers,
        newton_iters=iteration,
        residual_norm=norm,
        tau_used=tau,
        energy=energy,
        accepted=accepted,
        increment=float(np.max(np.abs(state.eta - state_n.eta))),
    )
