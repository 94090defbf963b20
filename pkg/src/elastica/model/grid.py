"""
Discrete objects living on the uniform periodic grid s_i = i·Δs, 0 ≤ i < N.

θ is stored as raw angles, never reduced modulo 2π: the periodic extension
is θ_{-1} = θ_{N-1} - 2πω and θ_N = θ_0 + 2πω, so the jump carries the
rotation index. ρ is extended periodically.
"""
from __future__ import annotations

from typing import Iterator, Tuple

import numpy as np

from elastica.common_exceptions import DimensionMismatch, ElasticaException

MIN_NODES = 8


class Grid:
    """Uniform discretization of [0, L] with N nodes."""

    def __init__(self, N: int, L: float):
        if N < MIN_NODES:
            raise ElasticaException(f"Grid needs at least {MIN_NODES} nodes, got {N}")
        if not L > 0:
            raise ElasticaException(f"Grid length must be positive, got {L}")
        self.N = int(N)
        self.L = float(L)
        self.ds = self.L / self.N

    @property
    def s(self) -> np.ndarray:
        """Node positions s_i = i·Δs"""
        return np.arange(self.N) * self.ds

    def ramp(self, omega: int) -> np.ndarray:
        """φ(s_i) = 2πω s_i / L, the angle of the ω-fold circle"""
        return 2.0 * np.pi * omega * self.s / self.L

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Grid):
            return False
        return self.N == other.N and self.L == other.L

    def __hash__(self) -> int:
        return hash((self.N, self.L))

    def __repr__(self) -> str:
        return f"Grid(N={self.N}, L={self.L:.6g})"


class State:
    """The discrete pair (θ̂, ρ̂)."""

    def __init__(self, theta: np.ndarray, rho: np.ndarray):
        theta = np.array(theta, dtype=float)
        rho = np.array(rho, dtype=float)
        if theta.ndim != 1 or theta.shape != rho.shape:
            raise DimensionMismatch(
                f"theta and rho must be 1-d arrays of equal length, got {theta.shape} and {rho.shape}"
            )
        if not (np.all(np.isfinite(theta)) and np.all(np.isfinite(rho))):
            raise ElasticaException("State entries must be finite")
        self.theta = theta
        self.rho = rho

    @property
    def N(self) -> int:
        """Number of nodes"""
        return self.theta.size

    @property
    def eta(self) -> np.ndarray:
        """(θ̂, ρ̂) stacked into a vector of length 2N"""
        return np.concatenate((self.theta, self.rho))

    @staticmethod
    def from_eta(eta: np.ndarray) -> State:
        """Inverse of `eta`"""
        half = eta.size // 2
        return State(eta[:half], eta[half:])

    def check_grid(self, grid: Grid) -> None:
        """Raise DimensionMismatch unless the state lives on `grid`"""
        if self.N != grid.N:
            raise DimensionMismatch(f"State has {self.N} nodes, grid has {grid.N}")

    def copy(self) -> State:
        return State(self.theta.copy(), self.rho.copy())

    def __iter__(self) -> Iterator[np.ndarray]:
        yield self.theta
        yield self.rho

    def __repr__(self) -> str:
        return f"State(N={self.N})"


class Multipliers:
    """The discrete KKT multipliers Λ, ordered as the constraint rows."""

    def __init__(self, mass: float = 0.0, sin_closure: float = 0.0, cos_closure: float = 0.0):
        values = np.array([mass, sin_closure, cos_closure], dtype=float)
        if not np.all(np.isfinite(values)):
            raise ElasticaException("Multipliers must be finite")
        self.values = values

    @property
    def mass(self) -> float:
        return float(self.values[0])

    @property
    def sin_closure(self) -> float:
        return float(self.values[1])

    @property
    def cos_closure(self) -> float:
        return float(self.values[2])

    @staticmethod
    def from_array(values: np.ndarray) -> Multipliers:
        return Multipliers(*np.asarray(values, dtype=float)[:3])

    def as_tuple(self) -> Tuple[float, float, float]:
        return self.mass, self.sin_closure, self.cos_closure

    def __repr__(self) -> str:
        return "Multipliers(mass={:.6g}, sin={:.6g}, cos={:.6g})".format(*self.values)
