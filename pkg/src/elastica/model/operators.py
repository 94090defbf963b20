"""
Periodic finite difference operators with the 2πω wrap for θ.

The undivided differences are returned; the sparse matrices below act on the
periodic part only and the wrap offsets are added separately, so that for
θ we have D θ̂ = M θ̂ + 2πω·e where e marks the wrapped entries.
"""
from enum import Enum
from functools import lru_cache

import numpy as np
import scipy.sparse as sparse

from elastica.model.grid import Grid, State


class Field(Enum):
    """Which component of the state a difference operator acts on"""

    theta = "theta"
    rho = "rho"


@lru_cache(maxsize=32)
def forward_matrix(N: int) -> sparse.csr_matrix:
    """(D₊x)_i = x_{i+1} - x_i, periodic"""
    return sparse.diags(
        diagonals=[-np.ones(N), np.ones(N - 1), 1.0],
        offsets=[0, 1, -(N - 1)],
        shape=(N, N),
        format="csr",
    )


@lru_cache(maxsize=32)
def backward_matrix(N: int) -> sparse.csr_matrix:
    """(D₋x)_i = x_i - x_{i-1}, periodic"""
    return sparse.diags(
        diagonals=[np.ones(N), -np.ones(N - 1), -1.0],
        offsets=[0, -1, N - 1],
        shape=(N, N),
        format="csr",
    )


@lru_cache(maxsize=32)
def centered_matrix(N: int) -> sparse.csr_matrix:
    """(D_c x)_i = x_{i+1} - x_{i-1} = (D₊x)_i + (D₋x)_i, periodic"""
    return (forward_matrix(N) + backward_matrix(N)).tocsr()


def forward_wrap(N: int, omega: int) -> np.ndarray:
    """Offset added to D₊θ̂: only the last entry sees θ_N = θ_0 + 2πω"""
    offset = np.zeros(N)
    offset[-1] = 2.0 * np.pi * omega
    return offset


def backward_wrap(N: int, omega: int) -> np.ndarray:
    """Offset added to D₋θ̂: only the first entry sees θ_{-1} = θ_{N-1} - 2πω"""
    offset = np.zeros(N)
    offset[0] = 2.0 * np.pi * omega
    return offset


def centered_wrap(N: int, omega: int) -> np.ndarray:
    return forward_wrap(N, omega) + backward_wrap(N, omega)


def _values(state: State, field: Field) -> np.ndarray:
    return state.theta if field == Field.theta else state.rho


def diff_forward(
    state: State, grid: Grid, field: Field = Field.theta, omega: int = 0
) -> np.ndarray:
    """Undivided forward differences of θ̂ (with the 2πω wrap) or of ρ̂."""
    state.check_grid(grid)
    x = _values(state, field)
    out = np.roll(x, -1) - x
    if field == Field.theta:
        out += forward_wrap(grid.N, omega)
    return out


def diff_backward(
    state: State, grid: Grid, field: Field = Field.theta, omega: int = 0
) -> np.ndarray:
    """Undivided backward differences of θ̂ (with the 2πω wrap) or of ρ̂."""
    state.check_grid(grid)
    x = _values(state, field)
    out = x - np.roll(x, 1)
    if field == Field.theta:
        out += backward_wrap(grid.N, omega)
    return out


def diff_centered(
    state: State, grid: Grid, field: Field = Field.theta, omega: int = 0
) -> np.ndarray:
    """Sum of the forward and backward differences, x_{i+1} - x_{i-1}."""
    return diff_forward(state, grid, field, omega) + diff_backward(
        state, grid, field, omega
    )


def centered_curvature(theta: np.ndarray, grid: Grid, omega: int) -> np.ndarray:
    """κ_i = (D_c θ̂)_i / (2Δs), the stencil used by the energy"""
    return (centered_matrix(grid.N) @ theta + centered_wrap(grid.N, omega)) / (
        2.0 * grid.ds
    )
