import os

import pytest

from elastica.common_exceptions import ConfigurationError
from elastica.schemas.flow_config import SymmetryMode
from elastica.schemas.initial_data import InitialDataKind
from elastica.schemas.run_config import (
    build_run_configuration,
    load_run_configuration,
    parse_params_string,
    parse_run_file,
    parse_run_text,
    parse_value,
)
from tests.fixtures import CONFIGS_DIR

MINIMAL = {"L": 6.283185307179586, "mu": 1.0, "beta.family": "exponential", "N": 32}


def test_parse_values() -> None:
    assert parse_value("3", "N") == 3
    assert parse_value("1e-4", "tau0") == 1e-4
    assert parse_value('"circle"', "initial.kind") == "circle"
    assert parse_value("true", "initial.project") is True
    assert parse_value("[1, 2.5]", "x") == [1, 2.5]
    with pytest.raises(ConfigurationError) as exc:
        parse_value("circle", "initial.kind")
    assert exc.value.key == "initial.kind"


def test_parse_run_text() -> None:
    text = """
    # a comment line
    L = 6.5   # trailing comment
    beta.family = "double_well"
    beta.params = "c=0.5"  # keeps the quoted value
    initial.params = "label=a#b"
    """
    values = parse_run_text(text)
    assert values["L"] == 6.5
    assert values["beta.family"] == "double_well"
    assert values["beta.params"] == "c=0.5"
    assert values["initial.params"] == "label=a#b"


@pytest.mark.parametrize(
    "text, key",
    [
        ("L = 1\nwidth = 2", "width"),
        ("L = 1\nL = 2", "L"),
        ("L 1", None),
    ],
    ids=["unknown", "duplicate", "no-equals"],
)
def test_parse_errors(text, key) -> None:
    with pytest.raises(ConfigurationError) as exc:
        parse_run_text(text)
    assert exc.value.key == key


def test_missing_file(tmp_path) -> None:
    with pytest.raises(ConfigurationError):
        parse_run_file(str(tmp_path / "nope.txt"))


def test_parse_params_string() -> None:
    assert parse_params_string("", "beta.params") == {}
    assert parse_params_string("c=0.1, b=8", "beta.params") == {"c": 0.1, "b": 8}
    assert parse_params_string(
        'theta_modes=[[2, 0.0, 0.05], [3, 0.1, 0.0]], label="a,b"', "initial.params"
    ) == {"theta_modes": [[2, 0.0, 0.05], [3, 0.1, 0.0]], "label": "a,b"}
    with pytest.raises(ConfigurationError) as exc:
        parse_params_string("c", "beta.params")
    assert exc.value.key == "beta.params"
    with pytest.raises(ConfigurationError):
        parse_params_string(3, "beta.params")


def test_minimal_configuration() -> None:
    run_config = build_run_configuration(dict(MINIMAL))
    assert run_config.model.nu == 0.0
    assert run_config.model.omega == 1
    assert run_config.grid.N == 32
    assert run_config.initial.kind == InitialDataKind.circle
    assert run_config.flow.symmetry_mode == SymmetryMode.increment
    assert run_config.stiffness.family == "exponential"

    resolved = run_config.resolved()
    assert resolved["model"]["beta"]["family"] == "exponential"
    assert resolved["flow"]["newton_tol_abs"] == run_config.flow.newton_tol_for(32)
    assert resolved["initial"]["kind"] == "circle"


@pytest.mark.parametrize(
    "overrides, key",
    [
        ({"L": None}, "L"),
        ({"N": None}, "N"),
        ({"beta.family": "logistic"}, "beta.family"),
        ({"mu": 0.0}, "mu"),
        ({"L": -1.0}, "L"),
        ({"tau0": 1.0, "tau_max": 1e-2}, "flow"),
        ({"symmetry_k": 5}, "symmetry_k"),
        ({"N": 2}, "N"),
        ({"N": 32.0}, "N"),
        ({"initial.kind": "spiral"}, "initial.kind"),
        ({"beta.params": "c=1"}, "beta.params"),
    ],
)
def test_invalid_configurations(overrides, key) -> None:
    values = dict(MINIMAL)
    for name, value in overrides.items():
        if value is None:
            del values[name]
        else:
            values[name] = value
    with pytest.raises(ConfigurationError) as exc:
        build_run_configuration(values)
    assert exc.value.key == key


def test_generator_params_are_parsed() -> None:
    values = dict(MINIMAL)
    values["initial.kind"] = "stadium"
    values["initial.params"] = "aspect=5, smoothing=0.05"
    run_config = build_run_configuration(values)
    assert run_config.initial.params == {"aspect": 5, "smoothing": 0.05}


@pytest.mark.parametrize("name", sorted(os.listdir(CONFIGS_DIR)))
def test_shipped_configurations_load(name) -> None:
    run_config = load_run_configuration(os.path.join(CONFIGS_DIR, name))
    assert run_config.N % (run_config.flow.symmetry_k or 1) == 0


def test_run_file_fixture(run_file) -> None:
    run_config = load_run_configuration(run_file(N="64", symmetry_k="4"))
    assert run_config.grid.N == 64
    assert run_config.flow.symmetry_k == 4
    assert run_config.stiffness.params == {"a": 1}
