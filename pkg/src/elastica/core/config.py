# pylint: disable=C0115,C0116, E0213

import logging
import os
from typing import Any, Dict, List, MutableMapping, Optional, Tuple

import toml
from pydantic import BaseSettings, ValidationError, validator
from pydantic.env_settings import SettingsSourceCallable

from elastica.common_exceptions import MissingConfig
from elastica.util.logger import Verbatim

logger = logging.getLogger(__name__)


class ElasticaSettings(BaseSettings):
    """Class used as a base model for configuration subsections."""

    class Config:

        # Set environment variables to take precedence over init values
        @classmethod
        def customise_sources(
            cls,
            init_settings: SettingsSourceCallable,
            env_settings: SettingsSourceCallable,
            file_secret_settings: SettingsSourceCallable,
        ) -> Tuple[SettingsSourceCallable, ...]:
            return env_settings, init_settings


class SolverSettings(ElasticaSettings):
    """Default values for the time stepping and Newton loops."""

    GROW_FACTOR: float = 1.2
    GROW_THRESHOLD: float = 1e-3
    SHRINK_THRESHOLD: float = 1e-1
    NEWTON_TOL_SCALE: float = 1e-10  # multiplied by sqrt(2N)
    NEWTON_TOL_REL: float = 1e-3
    NEWTON_MAX_ITER: int = 50
    STATIONARITY_EPS: float = 1e-8
    MAX_REJECTIONS: int = 20
    DIVERGENCE_FACTOR: float = 1e3

    @validator("GROW_FACTOR")
    def validate_grow_factor(cls, v: float) -> float:
        """The time step factor must enlarge the step"""
        if v <= 1:
            raise ValueError("GROW_FACTOR must be larger than one")
        return v

    class Config:
        env_prefix = "ELASTICA__SOLVER__"


class DiagnosticsSettings(ElasticaSettings):
    """Tolerances and constants used by the curve diagnostics."""

    ZERO_TOL_FACTOR: float = 1e-7  # relative to max |kappa|
    CLASSIFICATION_TOL: float = 1e-4
    C_2T: float = 146.628
    SINGULAR_PI_FACTOR: float = 1e-12
    FEASIBILITY_TOL: float = 1e-8

    class Config:
        env_prefix = "ELASTICA__DIAGNOSTICS__"


class LoggingSettings(ElasticaSettings):
    """Configuration settings for logging."""

    LEVEL: str = "INFO"
    LOG_ARRAYS: bool = False

    class Config:
        env_prefix = "ELASTICA__LOGGING__"


class OutputSettings(ElasticaSettings):
    """Where run directories are created."""

    OUT_DIR: str = "elastica_runs"

    class Config:
        env_prefix = "ELASTICA__OUTPUT__"


class ElasticaConfig(ElasticaSettings):
    """Configuration variables for the elastica toolkit"""

    solver: SolverSettings = SolverSettings()
    diagnostics: DiagnosticsSettings = DiagnosticsSettings()
    logging: LoggingSettings = LoggingSettings()
    output: OutputSettings = OutputSettings()

    class Config:  # pylint: disable=C0115
        case_sensitive = True


def load_file(file_name: str) -> str:
    """Load a file and from the first matching location.

    In order, will check:
    - A path set at ENV variable ELASTICA_CONFIG_PATH
    - The current directory
    - The parent directory
    - users home (~) directory

    raises FileNotFound if none is found
    """

    possible_directories = [
        os.getenv("ELASTICA_CONFIG_PATH"),
        os.curdir,
        os.pardir,
        os.path.expanduser("~"),
    ]

    directories: List[str] = [d for d in possible_directories if d]

    for dir_str in directories:
        possible_location = os.path.join(dir_str, file_name)
        if possible_location and os.path.isfile(possible_location):
            logger.info(
                "Loading file %s from %s", Verbatim(file_name), Verbatim(dir_str)
            )
            return possible_location
        logger.debug("%s not found at %s", Verbatim(file_name), Verbatim(dir_str))
    raise FileNotFoundError


def load_toml(file_name: str) -> MutableMapping[str, Any]:
    """
    Load toml file from possible locations specified in load_file.

    Will raise FileNotFoundError or ValidationError on missing or
    bad file
    """
    return toml.load(load_file(file_name))


def get_config() -> ElasticaConfig:
    """
    Attempt to read config file from:
    a) env var ELASTICA_CONFIG_PATH
    b) local directory
    c) parent directory
    d) home directory
    Every setting has a default, so a missing file only means defaults
    (overridden by the environment) are used.
    """
    try:
        return ElasticaConfig.parse_obj(load_toml("elastica.toml"))
    except FileNotFoundError:
        logger.debug("elastica.toml not found, using defaults")
    except (ValidationError, toml.TomlDecodeError) as e:
        logger.warning("elastica.toml could not be loaded: %s", Verbatim(str(e)))
    try:
        return ElasticaConfig()
    except ValidationError as exc:
        logger.error("ValidationError: %s", exc)
        raise MissingConfig(exc.args[0])


def resolve_out_dir(run_out_dir: Optional[str], the_config: ElasticaConfig) -> str:
    """ELASTICA_OUT wins over the run configuration, which wins over the settings."""
    override = os.getenv("ELASTICA_OUT")
    if override:
        return override
    return run_out_dir or the_config.output.OUT_DIR


def get_settings_summary(the_config: ElasticaConfig) -> Dict[str, Any]:
    """Settings recorded in run metadata."""
    as_dict = the_config.dict()
    return {
        "solver": as_dict["solver"],
        "diagnostics": as_dict["diagnostics"],
    }


config = get_config()
