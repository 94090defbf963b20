"""
Projection onto the k-fold symmetric functions without constant part,
acting on the Fourier coefficients of (u, ρ) with u = θ - ramp.
"""
import numpy as np

from elastica.geometry.symmetry import check_symmetry_order
from elastica.model.grid import Grid, State
from elastica.schemas.flow_config import SymmetryMode


def symmetric_part(values: np.ndarray, k: int) -> np.ndarray:
    """Keep the discrete Fourier modes ℓ ∈ kℕ, ℓ ≥ 1, drop everything else."""
    N = values.size
    spectrum = np.fft.rfft(values)
    modes = np.arange(spectrum.size)
    spectrum[(modes == 0) | (modes % k != 0)] = 0.0
    return np.fft.irfft(spectrum, n=N)


def project_symmetry(
    state_new: State,
    state_old: State,
    k: int,
    grid: Grid,
    omega: int = 0,
    mode: SymmetryMode = SymmetryMode.increment,
) -> State:
    """Symmetrize a step of the flow.

    In increment mode the projection is applied to state_new - state_old, so the
    means of θ - ramp and ρ are those of state_old. In verbatim mode
    (u, ρ) of state_new are projected directly and the means are lost.
    """
    check_symmetry_order(k, grid)
    state_new.check_grid(grid)
    state_old.check_grid(grid)
    if mode == SymmetryMode.verbatim:
        ramp = grid.ramp(omega)
        return State(
            ramp + symmetric_part(state_new.theta - ramp, k),
            symmetric_part(state_new.rho, k),
        )
    return State(
        state_old.theta + symmetric_part(state_new.theta - state_old.theta, k),
        state_old.rho + symmetric_part(state_new.rho - state_old.rho, k),
    )
