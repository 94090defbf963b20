"""
Run configuration files: flat `key = value` lines, `#` comments, strings in
double quotes, numbers plain. `beta.params` and `initial.params` are strings
of comma separated `name=value` pairs whose values are numbers, quoted
strings or bracketed lists.
"""
import ast
import logging
from typing import Any, Dict, List, Optional

from pydantic import ValidationError

from elastica.common_exceptions import (
    ConfigurationError,
    IncompatibleGrid,
    NoSuchStiffnessException,
)
from elastica.model.grid import MIN_NODES, Grid
from elastica.model.stiffness.stiffness_factory import get_stiffness
from elastica.schemas.base_class import BaseSchema
from elastica.schemas.flow_config import FlowConfig
from elastica.schemas.initial_data import InitialDataSpec
from elastica.schemas.model_params import ModelParams

logger = logging.getLogger(__name__)

MODEL_KEYS = ["L", "nu", "mu", "c0", "omega"]
FLOW_KEYS = [
    "tau0",
    "tau_min",
    "tau_max",
    "grow_factor",
    "grow_threshold",
    "shrink_threshold",
    "newton_tol_abs",
    "newton_tol_rel",
    "newton_max_iter",
    "t_final",
    "stationarity_eps",
    "symmetry_k",
    "symmetry_mode",
    "snapshot_every",
    "diagnostics_every",
    "max_steps",
]
INITIAL_KEYS = ["initial.kind", "initial.params", "initial.file", "initial.project"]
OTHER_KEYS = ["beta.family", "beta.params", "N", "out_dir", "seed"]
KNOWN_KEYS = MODEL_KEYS + FLOW_KEYS + INITIAL_KEYS + OTHER_KEYS
REQUIRED_KEYS = ["L", "mu", "beta.family", "N"]


class StiffnessSpec(BaseSchema):
    """`beta.family` and the parsed `beta.params`"""

    family: str
    params: Dict[str, Any] = {}


class RunConfiguration(BaseSchema):
    """A fully parsed run file"""

    model: ModelParams
    stiffness: StiffnessSpec
    N: int
    flow: FlowConfig
    initial: InitialDataSpec
    out_dir: Optional[str] = None
    seed: Optional[int] = None

    @property
    def grid(self) -> Grid:
        return Grid(self.N, self.model.L)

    def resolved(self) -> Dict[str, Any]:
        """Every value including the defaulted ones, as written to meta.json"""
        return {
            "model": self.model.to_dict(),
            "N": self.N,
            "flow": self.flow.resolved(self.N),
            "initial": {
                "kind": self.initial.kind.value,
                "params": self.initial.params,
                "file": self.initial.file,
                "project": self.initial.project,
            },
            "out_dir": self.out_dir,
            "seed": self.seed,
        }


def _strip_comment(line: str) -> str:
    in_string = False
    for position, char in enumerate(line):
        if char == '"':
            in_string = not in_string
        elif char == "#" and not in_string:
            return line[:position]
    return line


def parse_value(text: str, key: str) -> Any:
    """A quoted string, a number, a boolean or a bracketed list"""
    text = text.strip()
    if text in ("true", "false"):
        return text == "true"
    try:
        return ast.literal_eval(text)
    except (ValueError, SyntaxError):
        raise ConfigurationError(f"Cannot parse value '{text}' of key '{key}'", key=key)


def parse_run_text(text: str) -> Dict[str, Any]:
    """Parse the `key = value` lines of a run file."""
    values: Dict[str, Any] = {}
    for number, raw_line in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw_line).strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigurationError(f"Line {number} is not of the form key = value")
        key, _, value = (part.strip() for part in line.partition("="))
        if key not in KNOWN_KEYS:
            raise ConfigurationError(f"Unknown key '{key}' on line {number}", key=key)
        if key in values:
            raise ConfigurationError(f"Key '{key}' is set twice", key=key)
        values[key] = parse_value(value, key)
    return values


def parse_run_file(path: str) -> Dict[str, Any]:
    try:
        with open(path, encoding="utf-8") as run_file:
            return parse_run_text(run_file.read())
    except OSError as exc:
        raise ConfigurationError(f"Cannot read run file {path}: {exc}")


def _split_top_level(text: str) -> List[str]:
    parts: List[str] = []
    depth = 0
    in_string = False
    current = ""
    for char in text:
        if char in "\"'":
            in_string = not in_string
        elif not in_string and char == "[":
            depth += 1
        elif not in_string and char == "]":
            depth -= 1
        if char == "," and depth == 0 and not in_string:
            parts.append(current)
            current = ""
        else:
            current += char
    parts.append(current)
    return [part.strip() for part in parts if part.strip()]


def parse_params_string(text: str, key: str) -> Dict[str, Any]:
    """`"c=0.1, b=8"` becomes {"c": 0.1, "b": 8}"""
    if not isinstance(text, str):
        raise ConfigurationError(f"'{key}' must be a quoted string", key=key)
    params: Dict[str, Any] = {}
    for pair in _split_top_level(text):
        name, separator, value = pair.partition("=")
        if not separator or not name.strip():
            raise ConfigurationError(f"'{pair}' in '{key}' is not of the form name=value", key=key)
        params[name.strip()] = parse_value(value, key)
    return params


def _validation_key(exc: ValidationError, prefix: str = "") -> str:
    location = exc.errors()[0].get("loc", ())
    return prefix + ".".join(str(part) for part in location)


def build_run_configuration(values: Dict[str, Any]) -> RunConfiguration:
    """Validate parsed run file values. Errors name the offending key."""
    for key in REQUIRED_KEYS:
        if key not in values:
            raise ConfigurationError(f"Missing required key '{key}'", key=key)

    stiffness = StiffnessSpec(
        family=values["beta.family"],
        params=parse_params_string(values.get("beta.params", ""), "beta.params"),
    )
    try:
        beta = get_stiffness(stiffness.family, stiffness.params)
    except NoSuchStiffnessException as exc:
        raise ConfigurationError(str(exc), key="beta.family")

    try:
        model = ModelParams(beta=beta, **{k: values[k] for k in MODEL_KEYS if k in values})
    except ValidationError as exc:
        raise ConfigurationError(str(exc), key=_validation_key(exc))

    try:
        flow = FlowConfig(**{k: values[k] for k in FLOW_KEYS if k in values})
    except ValidationError as exc:
        key = _validation_key(exc)
        raise ConfigurationError(str(exc), key=key if key != "__root__" else "flow")

    initial_values = {
        k.split(".", 1)[1]: values[k] for k in INITIAL_KEYS if k in values
    }
    if "params" in initial_values:
        initial_values["params"] = parse_params_string(
            initial_values["params"], "initial.params"
        )
    try:
        initial = InitialDataSpec(**initial_values)
    except ValidationError as exc:
        raise ConfigurationError(str(exc), key=_validation_key(exc, "initial."))

    N = values["N"]
    if not isinstance(N, int) or N < MIN_NODES:
        raise ConfigurationError(f"N must be an integer of at least {MIN_NODES}", key="N")
    if flow.symmetry_k is not None and N % flow.symmetry_k != 0:
        raise ConfigurationError(
            str(IncompatibleGrid(f"symmetry_k={flow.symmetry_k} does not divide N={N}")),
            key="symmetry_k",
        )
    return RunConfiguration(
        model=model,
        stiffness=stiffness,
        N=N,
        flow=flow,
        initial=initial,
        out_dir=values.get("out_dir"),
        seed=values.get("seed"),
    )


def load_run_configuration(path: str) -> RunConfiguration:
    logger.info("Loading run configuration")
    return build_run_configuration(parse_run_file(path))
