import os

import numpy as np
import pytest
from pydantic import ValidationError

from elastica.common_exceptions import ConfigurationError
from elastica.geometry.symmetry import rotational_residual
from elastica.model.constraints import discrete_constraints
from elastica.model.grid import Grid
from elastica.schemas.initial_data import InitialDataKind, InitialDataSpec
from elastica.schemas.run_config import load_run_configuration
from elastica.service.initdata.initial_data_service import build_initial_state
from elastica.service.initdata.state_io import save_state
from tests.fixtures import CONFIGS_DIR, TWO_PI, make_params


def test_circle(params, grid) -> None:
    state = build_initial_state(InitialDataSpec(), params, grid)
    np.testing.assert_array_equal(state.theta, grid.ramp(1))

    shaped = build_initial_state(
        InitialDataSpec(kind="circle", params={"rho_profile": list(np.cos(grid.s))}),
        params,
        grid,
    )
    np.testing.assert_allclose(shaped.rho, np.cos(grid.s), atol=1e-12)


@pytest.mark.parametrize(
    "kind, generator_params",
    [
        ("perturbed_circle", {"theta_modes": [[2, 0.0, 0.05]], "rho_modes": [[1, 0.1, 0.0]]}),
        ("stadium", {"aspect": 2.0, "smoothing": 0.05}),
        ("neck", {}),
    ],
)
def test_generated_states_are_feasible(kind, generator_params) -> None:
    params = make_params()
    grid = Grid(720, TWO_PI)
    spec = InitialDataSpec(kind=kind, params=generator_params)
    state = build_initial_state(spec, params, grid)
    assert np.max(np.abs(discrete_constraints(state, params, grid))) <= 1e-12


def test_unknown_generator_parameter(params, grid) -> None:
    spec = InitialDataSpec(kind="stadium", params={"aspect": 2.0, "smoothing": 0.1, "radius": 1})
    with pytest.raises(ConfigurationError) as exc:
        build_initial_state(spec, params, grid)
    assert exc.value.key == "initial.params"


def test_seeded_random_circle(params, grid) -> None:
    spec = InitialDataSpec(kind=InitialDataKind.random_perturbed_circle, params={"k": 2})
    first = build_initial_state(spec, params, grid, seed=11)
    second = build_initial_state(spec, params, grid, seed=11)
    np.testing.assert_array_equal(first.eta, second.eta)


def test_file_input(circle, params, grid, tmp_path) -> None:
    path = str(tmp_path / "start.csv")
    save_state(circle, path, grid)
    state = build_initial_state(InitialDataSpec(kind="file", file=path), params, grid)
    np.testing.assert_array_equal(state.eta, circle.eta)


def test_file_kind_needs_a_path() -> None:
    with pytest.raises(ValidationError):
        InitialDataSpec(kind="file")


@pytest.mark.parametrize("name", sorted(os.listdir(CONFIGS_DIR)))
def test_shipped_initial_data(name) -> None:
    run_config = load_run_configuration(os.path.join(CONFIGS_DIR, name))
    grid = run_config.grid
    state = build_initial_state(run_config.initial, run_config.model, grid, run_config.seed)
    assert np.max(np.abs(discrete_constraints(state, run_config.model, grid))) <= 1e-12
    if run_config.flow.symmetry_k:
        residual = rotational_residual(
            state, grid, run_config.flow.symmetry_k, run_config.model.omega
        )
        assert residual < 1e-8
