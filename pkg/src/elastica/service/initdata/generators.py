"""
Initial data. Every generator returns a state satisfying the constraints to
DEFAULT_PROJECTION_TOL and is deterministic in its arguments.
"""
import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np

from elastica.common_exceptions import ConfigurationError
from elastica.model.grid import Grid, State
from elastica.schemas.model_params import ModelParams
from elastica.service.initdata.polyline import state_from_polyline
from elastica.service.initdata.projection import project_to_constraints

logger = logging.getLogger(__name__)

Mode = Tuple[int, float, float]

LEMNISCATE_SAMPLES_PER_NODE = 16
DOUBLE_COVER_ROTATION = 2.0 * np.pi / 1000


def fourier_series(grid: Grid, modes: Sequence[Mode]) -> np.ndarray:
    """Σ a_ℓ cos(2πℓ s/L) + b_ℓ sin(2πℓ s/L) on the grid nodes"""
    values = np.zeros(grid.N)
    phase = 2.0 * np.pi * grid.s / grid.L
    for mode in modes:
        ell, a, b = int(mode[0]), float(mode[1]), float(mode[2])
        if not 0 <= ell <= grid.N // 2:
            raise ConfigurationError(
                f"Mode {ell} is not resolved on N={grid.N} nodes", key="initial.params"
            )
        values += a * np.cos(ell * phase) + b * np.sin(ell * phase)
    return values


def make_circle(
    params: ModelParams, grid: Grid, rho_profile: Optional[np.ndarray] = None
) -> State:
    """θ = ramp, ρ ≡ ν or `rho_profile` shifted to mean ν."""
    if rho_profile is None:
        rho = np.full(grid.N, params.nu)
    else:
        rho_profile = np.asarray(rho_profile, dtype=float)
        rho = rho_profile - rho_profile.mean() + params.nu
    return State(grid.ramp(params.omega), rho)


def make_perturbed_circle(
    params: ModelParams,
    grid: Grid,
    theta_modes: Sequence[Mode] = (),
    rho_modes: Sequence[Mode] = (),
) -> State:
    """Circle with Fourier modes added to u = θ - ramp and to ρ - ν, projected
    onto the constraints."""
    state = State(
        grid.ramp(params.omega) + fourier_series(grid, theta_modes),
        params.nu + fourier_series(grid, rho_modes),
    )
    return project_to_constraints(state, params, grid)


def make_from_curvature(
    params: ModelParams,
    grid: Grid,
    kappa: np.ndarray,
    rho: Optional[np.ndarray] = None,
    project: bool = True,
) -> State:
    """
    θ from a nodal curvature profile by cumulative trapezoidal sums, starting
    at θ_0 = 0. A constant is added to κ so that its total turning is 2πω.
    """
    kappa = np.asarray(kappa, dtype=float)
    grid_kappa = kappa + (2.0 * np.pi * params.omega - grid.ds * np.sum(kappa)) / grid.L
    steps = 0.5 * grid.ds * (grid_kappa[:-1] + grid_kappa[1:])
    theta = np.concatenate(([0.0], np.cumsum(steps)))
    density = np.full(grid.N, params.nu) if rho is None else np.asarray(rho, dtype=float)
    state = State(theta, density)
    if project:
        return project_to_constraints(state, params, grid)
    return state


def smoothed_indicator(
    grid: Grid, center: float, half_width: float, transition: float
) -> np.ndarray:
    """Periodic indicator of [center - half_width, center + half_width] with
    raised cosine edges of width `transition` centred on the endpoints."""
    distance = np.abs((grid.s - center + 0.5 * grid.L) % grid.L - 0.5 * grid.L)
    if transition <= 0:
        return (distance <= half_width).astype(float)
    x = np.clip((half_width - distance) / transition, -0.5, 0.5)
    return 0.5 * (1.0 + np.sin(np.pi * x))


def stadium_dimensions(L: float, aspect: float) -> Tuple[float, float]:
    """Cap radius and length of each straight side of a stadium of perimeter L"""
    radius = L / (2.0 * np.pi + 4.0 * (aspect - 1.0))
    return radius, 2.0 * radius * (aspect - 1.0)


def make_stadium(
    params: ModelParams,
    grid: Grid,
    aspect: float,
    smoothing: float,
    rho_modes: Sequence[Mode] = (),
) -> State:
    """
    Stadium of width:length ratio 1:`aspect`. The curvature consists of two
    mollified caps, each turning by πω, centred at L/4 and 3L/4; `smoothing`
    is the transition width as a fraction of L.
    """
    if aspect < 1:
        raise ConfigurationError(f"aspect must be at least 1, got {aspect}", key="initial.params")
    if smoothing < 0:
        raise ConfigurationError("smoothing must be nonnegative", key="initial.params")
    radius, _ = stadium_dimensions(grid.L, aspect)
    kappa = np.zeros(grid.N)
    for center in (0.25 * grid.L, 0.75 * grid.L):
        cap = smoothed_indicator(grid, center, 0.5 * np.pi * radius, smoothing * grid.L)
        kappa += np.pi * params.omega * cap / (grid.ds * np.sum(cap))
    rho = params.nu + fourier_series(grid, rho_modes)
    return make_from_curvature(params, grid, kappa, rho)


def neck_dimensions(
    L: float, lobe_radius: float, half_gap: float, concave_angle: float
) -> Tuple[float, float]:
    """Radius of the concave arcs and length of each straight side of the neck.

    The concave radius closes each lobe symmetrically about the neck axis:
    r (1 - cos α) = R cos α - p.
    """
    cos_alpha = np.cos(concave_angle)
    concave_radius = (lobe_radius * cos_alpha - half_gap) / (1.0 - cos_alpha)
    lobe_length = 2.0 * concave_radius * concave_angle + lobe_radius * (
        np.pi + 2.0 * concave_angle
    )
    return concave_radius, 0.5 * L - lobe_length


def make_neck(  # pylint: disable=too-many-arguments,too-many-locals
    params: ModelParams,
    grid: Grid,
    lobe_radius: float = 0.25,
    half_gap: float = 5e-3,
    concave_angle: float = np.pi / 4,
    rho_amplitude: float = 20.0,
    rho_transition: float = 0.6,
) -> State:
    """
    Two drop shaped lobes joined by a straight neck of width 2·half_gap.

    Each lobe is a concave arc turning by -α, a convex arc of radius
    `lobe_radius` turning by π + 2α and another concave arc. The neck length
    takes up what is left of L. The density is 1 + rho_amplitude on the
    concave arcs and 1 elsewhere, with raised cosine edges of arclength
    `rho_transition`, scaled to mean ν.
    """
    if params.omega != 1:
        raise ConfigurationError("The neck curve has rotation index 1", key="omega")
    if not 0 < concave_angle < np.pi / 2:
        raise ConfigurationError("concave_angle must lie in (0, π/2)", key="initial.params")
    if rho_amplitude < 0 or rho_transition < 0:
        raise ConfigurationError(
            "rho_amplitude and rho_transition must be nonnegative", key="initial.params"
        )
    concave_radius, neck_length = neck_dimensions(
        grid.L, lobe_radius, half_gap, concave_angle
    )
    if concave_radius <= 0 or neck_length <= 0:
        raise ConfigurationError(
            f"Lobes of radius {lobe_radius} do not fit in a curve of length {grid.L}",
            key="initial.params",
        )
    concave_length = concave_radius * concave_angle
    convex_length = lobe_radius * (np.pi + 2.0 * concave_angle)

    # s = 0 sits in the middle of the lower side of the neck
    pieces: List[Tuple[float, float, bool]] = [(0.5 * neck_length, 0.0, False)]
    for _ in range(2):
        pieces += [
            (concave_length, -1.0 / concave_radius, True),
            (convex_length, 1.0 / lobe_radius, False),
            (concave_length, -1.0 / concave_radius, True),
            (neck_length, 0.0, False),
        ]
    pieces[-1] = (0.5 * neck_length, 0.0, False)

    lengths = np.array([length for length, _, _ in pieces])
    curvatures = np.array([value for _, value, _ in pieces])
    starts = np.concatenate(([0.0], np.cumsum(lengths)[:-1]))
    start_angles = np.concatenate(([0.0], np.cumsum(lengths * curvatures)[:-1]))
    index = np.minimum(np.searchsorted(starts, grid.s, side="right") - 1, len(pieces) - 1)
    # θ of the piecewise circular curve, integrated exactly at the nodes
    theta = start_angles[index] + curvatures[index] * (grid.s - starts[index])
    raw = np.ones(grid.N)
    for start, (length, _, is_concave) in zip(starts, pieces):
        if is_concave:
            raw += rho_amplitude * smoothed_indicator(
                grid, start + 0.5 * length, 0.5 * length, rho_transition
            )
    rho = params.nu * raw / raw.mean()
    logger.debug(
        "Neck with concave radius %.4g and neck length %.4g", concave_radius, neck_length
    )
    return project_to_constraints(State(theta, rho), params, grid)


def lemniscate_points(samples: int) -> np.ndarray:
    """Bernoulli lemniscate, traversed once, starting at its right tip"""
    t = 2.0 * np.pi * np.arange(samples) / samples
    denominator = 1.0 + np.sin(t) ** 2
    return np.column_stack((np.cos(t) / denominator, np.sin(t) * np.cos(t) / denominator))


def make_lemniscate(params: ModelParams, grid: Grid) -> State:
    """Figure eight sketch with rotation index 0"""
    points = lemniscate_points(LEMNISCATE_SAMPLES_PER_NODE * grid.N)
    return state_from_polyline(points, params, grid)


def make_double_lemniscate(params: ModelParams, grid: Grid) -> State:
    """The lemniscate traversed twice, the second copy rotated by 2π/1000"""
    points = lemniscate_points(LEMNISCATE_SAMPLES_PER_NODE * grid.N // 2)
    cos, sin = np.cos(DOUBLE_COVER_ROTATION), np.sin(DOUBLE_COVER_ROTATION)
    rotated = points @ np.array([[cos, sin], [-sin, cos]])
    return state_from_polyline(np.vstack((points, rotated)), params, grid)


def make_random_perturbed_circle(  # pylint: disable=too-many-arguments
    params: ModelParams,
    grid: Grid,
    rng: np.random.Generator,
    k: int = 1,
    n_modes: int = 3,
    theta_amplitude: float = 0.1,
    rho_amplitude: float = 0.1,
) -> State:
    """Perturbed circle whose modes are the first `n_modes` multiples of k,
    with coefficients drawn uniformly from [-amplitude, amplitude]."""
    ells = k * np.arange(1, n_modes + 1)
    theta_modes = [
        (int(ell), *rng.uniform(-theta_amplitude, theta_amplitude, size=2)) for ell in ells
    ]
    rho_modes = [
        (int(ell), *rng.uniform(-rho_amplitude, rho_amplitude, size=2)) for ell in ells
    ]
    return make_perturbed_circle(params, grid, theta_modes, rho_modes)
