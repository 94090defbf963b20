import numpy as np
import pytest

from elastica.common_exceptions import IncompatibleGrid
from elastica.geometry.symmetry import (
    FourierCoefficients,
    axial_residual,
    fourier_coefficients,
    rotational_residual,
    symmetry_residuals,
)
from elastica.model.grid import Grid, State
from tests.fixtures import TWO_PI


@pytest.fixture
def grid60() -> Grid:
    return Grid(60, TWO_PI)


def test_fourier_coefficients_of_known_series() -> None:
    grid = Grid(32, TWO_PI)
    values = 1.0 + 2.0 * np.cos(3 * grid.s) + 0.5 * np.sin(grid.s)
    coefficients = FourierCoefficients.of(values)
    assert coefficients.a[0] == pytest.approx(1.0)
    assert coefficients.a[3] == pytest.approx(2.0)
    assert coefficients.b[1] == pytest.approx(0.5)
    amplitudes = coefficients.amplitudes
    amplitudes[[0, 1, 3]] = 0.0
    np.testing.assert_allclose(amplitudes, 0.0, atol=1e-12)


def test_coefficients_of_the_angle_exclude_the_ramp(grid60) -> None:
    state = State(grid60.ramp(1) + 0.1 * np.cos(6 * grid60.s), np.full(grid60.N, 0.5))
    theta_part, rho_part = fourier_coefficients(state, grid60, 1)
    assert theta_part.a[6] == pytest.approx(0.1)
    assert theta_part.amplitudes[1] == pytest.approx(0.0, abs=1e-12)
    assert rho_part.a[0] == pytest.approx(0.5)


def test_rotational_residual(grid60) -> None:
    symmetric = State(
        grid60.ramp(1) + 0.1 * np.sin(3 * grid60.s), 0.2 * np.cos(6 * grid60.s)
    )
    assert rotational_residual(symmetric, grid60, 3, 1) < 1e-12
    assert rotational_residual(symmetric, grid60, 6, 1) > 0.05

    with pytest.raises(IncompatibleGrid):
        rotational_residual(symmetric, grid60, 7, 1)


def test_axial_residual(grid60) -> None:
    even = State(
        grid60.ramp(1) + 0.1 * np.sin(2 * grid60.s), 0.3 * np.cos(2 * grid60.s)
    )
    assert axial_residual(even, grid60, 1) < 1e-12

    # κ - 1 ∝ cos s - 2 sin 2s has no reflection axis
    skew = State(
        grid60.ramp(1) + 0.1 * (np.sin(grid60.s) + np.cos(2 * grid60.s)),
        np.zeros(grid60.N),
    )
    assert axial_residual(skew, grid60, 1) > 1e-3


def test_axial_residual_finds_edge_centred_axes() -> None:
    grid = Grid(20, TWO_PI)
    # even about s = Δs/2, halfway between two nodes
    shift = 0.5 * grid.ds
    state = State(
        grid.ramp(1) + 0.1 * np.sin(grid.s - shift), 0.2 * np.cos(grid.s - shift)
    )
    assert axial_residual(state, grid, 1) < 1e-12


def test_symmetry_report(grid60) -> None:
    circle = State(grid60.ramp(1), np.zeros(grid60.N))
    report = symmetry_residuals(circle, grid60, 5, 1, lambda_theta=np.zeros(2))
    assert report.k == 5
    assert report.rot_residual < 1e-12
    assert report.axial_residual < 1e-12
    with pytest.raises(IncompatibleGrid):
        symmetry_residuals(circle, grid60, 8, 1)
