"""
Rotational and axial symmetry diagnostics.

A state is k-fold rotationally symmetric when u = θ - ramp and ρ are L/k
periodic; it is axially symmetric when (κ, ρ) is even about some anchor.
"""
import logging
from typing import Optional, Tuple

import numpy as np

from elastica.common_exceptions import IncompatibleGrid
from elastica.geometry.curvature import curvature
from elastica.model.grid import Grid, State

logger = logging.getLogger(__name__)


class FourierCoefficients:
    """Real coefficients of x_i = a_0 + Σ_ℓ a_ℓ cos(2πℓ s_i/L) + b_ℓ sin(2πℓ s_i/L)"""

    def __init__(self, a: np.ndarray, b: np.ndarray):
        self.a = a
        self.b = b

    @property
    def amplitudes(self) -> np.ndarray:
        return np.hypot(self.a, self.b)

    @staticmethod
    def of(values: np.ndarray) -> "FourierCoefficients":
        N = values.size
        spectrum = np.fft.rfft(values) / N
        a = 2.0 * spectrum.real
        b = -2.0 * spectrum.imag
        a[0] = spectrum[0].real
        if N % 2 == 0:
            a[-1] = spectrum[-1].real
        return FourierCoefficients(a, b)


class SymmetryReport:
    """Residuals of the k-fold rotational and the axial symmetry"""

    def __init__(
        self,
        k: int,
        rot_residual: float,
        axial_residual: float,
        lambda_theta: Optional[np.ndarray] = None,
    ):
        self.k = k
        self.rot_residual = float(rot_residual)
        self.axial_residual = float(axial_residual)
        self.lambda_theta = lambda_theta

    def __repr__(self) -> str:
        return (
            f"SymmetryReport(k={self.k}, rot={self.rot_residual:.3e}, "
            f"axial={self.axial_residual:.3e})"
        )


def check_symmetry_order(k: int, grid: Grid) -> None:
    """Raise IncompatibleGrid unless k ≥ 1 divides N"""
    if k < 1 or grid.N % k != 0:
        raise IncompatibleGrid(f"Symmetry order {k} does not divide N={grid.N}")


def fourier_coefficients(
    state: State, grid: Grid, omega: int
) -> Tuple[FourierCoefficients, FourierCoefficients]:
    """Fourier coefficients of u = θ - ramp and of ρ, in that order."""
    state.check_grid(grid)
    return (
        FourierCoefficients.of(state.theta - grid.ramp(omega)),
        FourierCoefficients.of(state.rho),
    )


def rotational_residual(state: State, grid: Grid, k: int, omega: int) -> float:
    """max over 0 < n < k of ‖(u, ρ)(· + nL/k) - (u, ρ)‖_∞"""
    check_symmetry_order(k, grid)
    state.check_grid(grid)
    u = state.theta - grid.ramp(omega)
    shift = grid.N // k
    residual = 0.0
    for n in range(1, k):
        for values in (u, state.rho):
            residual = max(
                residual, float(np.max(np.abs(np.roll(values, -n * shift) - values)))
            )
    return residual


def axial_residual(state: State, grid: Grid, omega: int) -> float:
    """Smallest reflection mismatch of (κ, ρ) over node and edge centred anchors."""
    state.check_grid(grid)
    kappa = curvature(state, grid, omega)
    N = grid.N
    anchors = np.arange(N)[:, None]
    offsets = np.arange(N)[None, :]
    plus = (anchors + offsets) % N
    best = np.inf
    # node centred reflections i ↦ 2a - i, edge centred i ↦ 2a + 1 - i
    for minus in ((anchors - offsets) % N, (anchors - 1 - offsets) % N):
        mismatch = np.maximum(
            np.abs(kappa[plus] - kappa[minus]), np.abs(state.rho[plus] - state.rho[minus])
        )
        best = min(best, float(np.min(np.max(mismatch, axis=1))))
    return best


def symmetry_residuals(
    state: State,
    grid: Grid,
    k: int,
    omega: int,
    lambda_theta: Optional[np.ndarray] = None,
) -> SymmetryReport:
    """Both symmetry residuals of `state`; raises IncompatibleGrid if k ∤ N."""
    check_symmetry_order(k, grid)
    return SymmetryReport(
        k=k,
        rot_residual=rotational_residual(state, grid, k, omega),
        axial_residual=axial_residual(state, grid, omega),
        lambda_theta=lambda_theta,
    )
