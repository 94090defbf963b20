from enum import Enum
from typing import Optional

import numpy as np

from elastica.core.config import config
from elastica.model.grid import Grid, State
from elastica.model.operators import Field, diff_backward, diff_centered, diff_forward


class Stencil(Enum):
    """Finite difference stencil for κ = ∂_s θ"""

    centered = "centered"
    forward = "forward"
    backward = "backward"


def curvature(
    state: State, grid: Grid, omega: int, stencil: Stencil = Stencil.centered
) -> np.ndarray:
    """Nodewise curvature. The centered stencil (D_c θ̂)_i/(2Δs) matches the
    energy; the one sided stencils are only meant for sensitivity checks."""
    if stencil == Stencil.forward:
        return diff_forward(state, grid, Field.theta, omega) / grid.ds
    if stencil == Stencil.backward:
        return diff_backward(state, grid, Field.theta, omega) / grid.ds
    return diff_centered(state, grid, Field.theta, omega) / (2.0 * grid.ds)


def default_zero_tol(kappa: np.ndarray) -> float:
    """ZERO_TOL_FACTOR · max|κ|"""
    if kappa.size == 0:
        return 0.0
    return config.diagnostics.ZERO_TOL_FACTOR * float(np.max(np.abs(kappa)))


def _resolve_tol(kappa: np.ndarray, tol: Optional[float]) -> float:
    if tol is None:
        return default_zero_tol(kappa)
    if tol < 0:
        raise ValueError(f"tol must be nonnegative, got {tol}")
    return tol


def count_zeros(kappa: np.ndarray, tol: Optional[float] = None) -> int:
    """Number of zeros of a periodic nodal profile.

    Each maximal cyclic run of |κ_i| ≤ tol counts once, and so does every
    strict sign flip between two neighbouring nodes that are both outside the
    tolerance band. A run covering every node counts as a single zero.
    """
    kappa = np.asarray(kappa, dtype=float)
    tol = _resolve_tol(kappa, tol)
    small = np.abs(kappa) <= tol
    if small.all():
        return 1 if kappa.size else 0
    runs = int(np.count_nonzero(small & ~np.roll(small, 1)))
    following = np.roll(kappa, -1)
    flips = (~small) & (~np.roll(small, -1)) & (np.sign(kappa) != np.sign(following))
    return runs + int(np.count_nonzero(flips))


def count_sign_changes(kappa: np.ndarray, tol: Optional[float] = None) -> int:
    """Number of inflection points: cyclic transitions from κ > tol to κ < -tol
    (or back), possibly across runs of near-zero values."""
    kappa = np.asarray(kappa, dtype=float)
    tol = _resolve_tol(kappa, tol)
    signs = np.sign(kappa[np.abs(kappa) > tol])
    if signs.size < 2:
        return 0
    return int(np.count_nonzero(signs != np.roll(signs, -1)))
