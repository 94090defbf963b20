import logging
from typing import Any, Callable, Dict, Optional

import numpy as np

from elastica.common_exceptions import ConfigurationError
from elastica.model.grid import Grid, State
from elastica.schemas.initial_data import InitialDataKind, InitialDataSpec
from elastica.schemas.model_params import ModelParams
from elastica.service.initdata import generators
from elastica.service.initdata.state_io import load_state
from elastica.util.logger import Verbatim

logger = logging.getLogger(__name__)

Generator = Callable[..., State]

_GENERATORS: Dict[InitialDataKind, Generator] = {
    InitialDataKind.circle: generators.make_circle,
    InitialDataKind.perturbed_circle: generators.make_perturbed_circle,
    InitialDataKind.stadium: generators.make_stadium,
    InitialDataKind.neck: generators.make_neck,
    InitialDataKind.lemniscate: generators.make_lemniscate,
    InitialDataKind.double_lemniscate: generators.make_double_lemniscate,
}


def build_initial_state(
    spec: InitialDataSpec,
    params: ModelParams,
    grid: Grid,
    seed: Optional[int] = None,
) -> State:
    """The initial datum described by `spec`.

    Generator parameters are passed through by name; unknown names are
    reported as a configuration error on `initial.params`.
    """
    logger.info("Building initial data of kind %s", Verbatim(spec.kind.value))
    if spec.kind == InitialDataKind.file:
        return load_state(str(spec.file), grid, params, project=spec.project)

    kwargs: Dict[str, Any] = dict(spec.params)
    if spec.kind == InitialDataKind.random_perturbed_circle:
        generator: Generator = generators.make_random_perturbed_circle
        kwargs["rng"] = np.random.default_rng(seed)
    else:
        generator = _GENERATORS[spec.kind]
    if spec.kind == InitialDataKind.circle and "rho_profile" in kwargs:
        kwargs["rho_profile"] = np.asarray(kwargs["rho_profile"], dtype=float)
    try:
        return generator(params, grid, **kwargs)
    except TypeError as exc:
        raise ConfigurationError(
            f"Invalid parameters for initial data '{spec.kind.value}': {exc}",
            key="initial.params",
        )
