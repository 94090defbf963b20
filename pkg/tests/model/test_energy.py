import numpy as np
import pytest

from elastica.model.constraints import (
    constraint_hessian_contraction,
    constraint_jacobian,
    discrete_constraints,
)
from elastica.model.energy import (
    discrete_energy,
    discrete_gradient,
    energy_hessian,
    energy_split,
)
from elastica.model.grid import Grid, Multipliers, State
from tests.fixtures import TWO_PI, make_params

H = 1e-6


def _finite_difference_gradient(func, eta: np.ndarray) -> np.ndarray:
    gradient = np.zeros_like(eta)
    for index in range(eta.size):
        step = np.zeros_like(eta)
        step[index] = H
        gradient[index] = (
            func(State.from_eta(eta + step)) - func(State.from_eta(eta - step))
        ) / (2 * H)
    return gradient


@pytest.fixture
def heterogeneous_params():
    return make_params("exponential", {"a": 0.5}, mu=0.7, c0=0.3)


def test_gradient_matches_finite_differences(heterogeneous_params, grid, random_state) -> None:
    expected = _finite_difference_gradient(
        lambda state: discrete_energy(state, heterogeneous_params, grid), random_state.eta
    )
    np.testing.assert_allclose(
        discrete_gradient(random_state, heterogeneous_params, grid),
        expected,
        rtol=1e-5,
        atol=1e-7,
    )


def test_hessian_matches_finite_differences(heterogeneous_params, grid, random_state) -> None:
    hessian = energy_hessian(random_state, heterogeneous_params, grid)
    assert abs(hessian - hessian.T).max() < 1e-12
    direction = np.random.default_rng(3).standard_normal(2 * grid.N)
    plus = State.from_eta(random_state.eta + H * direction)
    minus = State.from_eta(random_state.eta - H * direction)
    expected = (
        discrete_gradient(plus, heterogeneous_params, grid)
        - discrete_gradient(minus, heterogeneous_params, grid)
    ) / (2 * H)
    np.testing.assert_allclose(hessian @ direction, expected, rtol=1e-5, atol=1e-6)


def test_constraint_derivatives(heterogeneous_params, grid, random_state) -> None:
    jacobian = constraint_jacobian(random_state, grid)
    for row in range(3):
        expected = _finite_difference_gradient(
            lambda state: discrete_constraints(state, heterogeneous_params, grid)[row],
            random_state.eta,
        )
        np.testing.assert_allclose(jacobian[row], expected, atol=1e-8)

    multipliers = Multipliers(0.3, -1.2, 0.8)
    contraction = constraint_hessian_contraction(random_state, multipliers, grid)
    direction = np.random.default_rng(5).standard_normal(2 * grid.N)
    plus = State.from_eta(random_state.eta + H * direction)
    minus = State.from_eta(random_state.eta - H * direction)
    expected = (
        constraint_jacobian(plus, grid).T @ multipliers.values
        - constraint_jacobian(minus, grid).T @ multipliers.values
    ) / (2 * H)
    np.testing.assert_allclose(contraction @ direction, expected, atol=1e-8)


def test_circle_is_feasible(params, grid, circle) -> None:
    np.testing.assert_allclose(discrete_constraints(circle, params, grid), 0.0, atol=1e-13)


def test_homogeneous_circle_energy() -> None:
    params = make_params("double_well", {"c": 1})
    grid = Grid(720, TWO_PI)
    circle = State(grid.ramp(1), np.zeros(grid.N))
    assert discrete_energy(circle, params, grid) == pytest.approx(TWO_PI, rel=1e-12)
    assert energy_split(circle, params, grid).rho == 0.0


@pytest.mark.parametrize("mu", [0.5, 1.0, 2.0])
def test_oscillating_density_energy(mu) -> None:
    """(3/8 + c + 2μ)π with c = 1, up to the O(Δs²) error of the difference quotient"""
    params = make_params("double_well", {"c": 1}, mu=mu)
    grid = Grid(720, TWO_PI)
    state = State(grid.ramp(1), np.sin(2 * grid.s))
    split = energy_split(state, params, grid)
    assert split.theta == pytest.approx(1.375 * np.pi, rel=1e-12)
    assert split.rho == pytest.approx(
        mu * TWO_PI * (np.sin(grid.ds) / grid.ds) ** 2, rel=1e-10
    )
    assert split.total == pytest.approx((1.375 + 2 * mu) * np.pi, rel=1e-3)


def test_energy_ordering_flips_at_five_sixteenths() -> None:
    grid = Grid(720, TWO_PI)
    circle = State(grid.ramp(1), np.zeros(grid.N))
    wave = State(grid.ramp(1), np.sin(2 * grid.s))
    for mu, wave_is_lower in ((0.30, True), (0.33, False)):
        params = make_params("double_well", {"c": 1}, mu=mu)
        lower = discrete_energy(wave, params, grid) < discrete_energy(circle, params, grid)
        assert lower == wave_is_lower


@pytest.mark.parametrize("mu", [0.5, 1.0, 2.0])
def test_single_mode_density_energy(mu) -> None:
    """(3/8 + c + μ/2)π with c = 1"""
    params = make_params("double_well", {"c": 1}, mu=mu)
    grid = Grid(720, TWO_PI)
    state = State(grid.ramp(1), np.sin(grid.s))
    split = energy_split(state, params, grid)
    assert split.theta == pytest.approx(1.375 * np.pi, rel=1e-12)
    half_step = 0.5 * grid.ds
    assert split.rho == pytest.approx(
        0.5 * mu * np.pi * (np.sin(half_step) / half_step) ** 2, rel=1e-10
    )
    assert split.total == pytest.approx((1.375 + 0.5 * mu) * np.pi, rel=1e-4)


def test_single_mode_ordering_flips_at_five_quarters() -> None:
    grid = Grid(720, TWO_PI)
    circle = State(grid.ramp(1), np.zeros(grid.N))
    wave = State(grid.ramp(1), np.sin(grid.s))
    for mu, wave_is_lower in ((1.2, True), (1.3, False)):
        params = make_params("double_well", {"c": 1}, mu=mu)
        lower = discrete_energy(wave, params, grid) < discrete_energy(circle, params, grid)
        assert lower == wave_is_lower


def test_density_trades_bending_for_diffusion(grid) -> None:
    """A density away from the top of the well lowers the bending part and raises the diffusion part."""
    params = make_params("double_well", {"c": 1})
    flat = State(grid.ramp(1), np.zeros(grid.N))
    bumped = State(grid.ramp(1), 0.3 * np.cos(grid.s))
    before, after = energy_split(flat, params, grid), energy_split(bumped, params, grid)
    assert after.theta < before.theta
    assert after.rho > before.rho
