import math
import os
from typing import Callable, Optional

import numpy as np
import pytest

from elastica.model.grid import Grid, State
from elastica.model.stiffness.stiffness_factory import get_stiffness
from elastica.schemas.model_params import ModelParams

TWO_PI = 2.0 * math.pi
CONFIGS_DIR = os.path.join(os.path.dirname(__file__), os.pardir, "data", "configs")


def make_params(
    family: str = "exponential", beta_params: Optional[dict] = None, **model: float
) -> ModelParams:
    values = {"L": TWO_PI, "mu": 1.0, "nu": 0.0, "omega": 1, "c0": 0.0}
    values.update(model)
    return ModelParams(beta=get_stiffness(family, beta_params or {}), **values)


@pytest.fixture
def params_factory() -> Callable[..., ModelParams]:
    return make_params


@pytest.fixture
def params() -> ModelParams:
    """β = exp(x), μ = 1 on the unit circle"""
    return make_params()


@pytest.fixture
def grid() -> Grid:
    return Grid(64, TWO_PI)


@pytest.fixture
def circle(params: ModelParams, grid: Grid) -> State:
    return State(grid.ramp(params.omega), np.full(grid.N, params.nu))


@pytest.fixture
def random_state(grid: Grid) -> State:
    """Not feasible, only meant for derivative checks"""
    rng = np.random.default_rng(7)
    return State(
        grid.ramp(1) + 0.2 * rng.standard_normal(grid.N),
        0.3 * rng.standard_normal(grid.N),
    )


@pytest.fixture
def run_file(tmp_path) -> Callable[..., str]:
    """Writes a run file from `key = value` pairs and returns its path; a None
    override leaves the key out."""

    def write(name: str = "circle.txt", **overrides: Optional[str]) -> str:
        values = {
            "L": "6.283185307179586",
            "nu": "0.0",
            "mu": "1.0",
            "omega": "1",
            "beta.family": '"exponential"',
            "beta.params": '"a=1"',
            "N": "32",
            "t_final": "0.01",
            "initial.kind": '"circle"',
        }
        values.update(overrides)
        path = tmp_path / name
        path.write_text(
            "\n".join(f"{key} = {value}" for key, value in values.items() if value is not None)
            + "\n",
            encoding="utf-8",
        )
        return str(path)

    return write
