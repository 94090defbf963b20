"""
Discrete energy

    Ê = Δs/2 Σ_i [ β(ρ_i) ((D_c θ̂)_i/(2Δs) - c0)² + μ ((ρ_{i+1} - ρ_i)/Δs)² ]

with its exact gradient and Hessian. Writing κ = (C θ̂ + w)/(2Δs) with C the
periodic centered difference matrix, w the wrap offsets, e = κ - c0 and F the
periodic forward difference matrix:

    ∇_θ Ê = ½ Cᵀ(β e)
    ∇_ρ Ê = Δs/2 β'(ρ) e² + μ/Δs FᵀF ρ
    ∇²_θθ Ê = Cᵀ diag(β) C / (4Δs)
    ∇²_θρ Ê = ½ Cᵀ diag(β' e)
    ∇²_ρρ Ê = diag(Δs/2 β'' e²) + μ/Δs FᵀF
"""
from typing import Tuple

import numpy as np
import scipy.sparse as sparse

from elastica.model.grid import Grid, State
from elastica.model.operators import centered_curvature, centered_matrix, forward_matrix
from elastica.schemas.model_params import ModelParams


class EnergySplit:
    """Total energy and its bending (θ) and diffusion (ρ) parts."""

    def __init__(self, theta: float, rho: float):
        self.theta = float(theta)
        self.rho = float(rho)

    @property
    def total(self) -> float:
        return self.theta + self.rho

    def __repr__(self) -> str:
        return f"EnergySplit(total={self.total:.12g}, theta={self.theta:.12g}, rho={self.rho:.12g})"


def _bending_terms(
    state: State, params: ModelParams, grid: Grid
) -> Tuple[np.ndarray, np.ndarray]:
    state.check_grid(grid)
    excess = centered_curvature(state.theta, grid, params.omega) - params.c0
    beta = params.beta.positive_value(state.rho)
    return excess, beta


def _laplacian_form(N: int) -> sparse.csr_matrix:
    forward = forward_matrix(N)
    return (forward.T @ forward).tocsr()


def energy_split(state: State, params: ModelParams, grid: Grid) -> EnergySplit:
    """The two parts of the discrete energy, evaluated separately."""
    excess, beta = _bending_terms(state, params, grid)
    slope = (np.roll(state.rho, -1) - state.rho) / grid.ds
    e_theta = 0.5 * grid.ds * np.sum(beta * excess**2)
    e_rho = 0.5 * grid.ds * params.mu * np.sum(slope**2)
    return EnergySplit(e_theta, e_rho)


def discrete_energy(state: State, params: ModelParams, grid: Grid) -> float:
    """Ê_μ(θ̂, ρ̂)"""
    return energy_split(state, params, grid).total


def discrete_gradient(state: State, params: ModelParams, grid: Grid) -> np.ndarray:
    """(∇_θ Ê, ∇_ρ Ê) stacked, the exact derivative of `discrete_energy`."""
    excess, beta = _bending_terms(state, params, grid)
    N = grid.N
    grad_theta = 0.5 * (centered_matrix(N).T @ (beta * excess))
    grad_rho = 0.5 * grid.ds * params.beta.first_derivative(state.rho) * excess**2
    grad_rho = grad_rho + params.mu / grid.ds * (_laplacian_form(N) @ state.rho)
    return np.concatenate((grad_theta, grad_rho))


def energy_hessian(
    state: State, params: ModelParams, grid: Grid
) -> sparse.csr_matrix:
    """Exact Hessian of `discrete_energy`, a symmetric sparse 2N×2N matrix."""
    excess, beta = _bending_terms(state, params, grid)
    N = grid.N
    ds = grid.ds
    centered = centered_matrix(N)
    theta_theta = centered.T @ sparse.diags(beta) @ centered / (4.0 * ds)
    theta_rho = 0.5 * centered.T @ sparse.diags(
        params.beta.first_derivative(state.rho) * excess
    )
    rho_rho = sparse.diags(
        0.5 * ds * params.beta.second_derivative(state.rho) * excess**2
    ) + params.mu / ds * _laplacian_form(N)
    return sparse.bmat(
        [[theta_theta, theta_rho], [theta_rho.T, rho_rho]], format="csr"
    )
