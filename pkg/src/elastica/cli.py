"""The elastica command line: flow, minimize, check and batch runs."""
import json
import logging
import os
import sys
from functools import wraps
from typing import Any, Callable, List

import click
import dask

from elastica.common_exceptions import (
    ConfigurationError,
    DimensionMismatch,
    ElasticaException,
    FormatError,
    IncompatibleGrid,
    InfeasibleInitialState,
    MissingConfig,
)
from elastica.core.config import config, resolve_out_dir
from elastica.schemas.run_config import RunConfiguration, load_run_configuration
from elastica.service.check_service import state_report
from elastica.service.flow.flow_runner_service import run_flow
from elastica.service.initdata.initial_data_service import build_initial_state
from elastica.service.initdata.state_io import load_state
from elastica.service.stationary.classification import classify_state
from elastica.service.stationary.stationary_solver import solve_stationary
from elastica.service.storage.run_writer_service import RunWriter
from elastica.util.logger import Verbatim, configure_logging
from elastica.util.text import run_name

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIGURATION = 1
EXIT_SOLVER = 2

CONFIGURATION_ERRORS = (
    ConfigurationError,
    FormatError,
    DimensionMismatch,
    IncompatibleGrid,
    InfeasibleInitialState,
)


def exit_code_for(exc: BaseException) -> int:
    """1 for anything wrong with the inputs, 2 for solver failures"""
    if isinstance(exc, CONFIGURATION_ERRORS + (MissingConfig,)):
        return EXIT_CONFIGURATION
    return EXIT_SOLVER


def reports_errors(func: Callable[..., int]) -> Callable[..., int]:
    """
    Turns elastica errors into an exit code and one JSON line on stderr:
    {"error": "<ClassName>", "message": "...", "key": ...}
    """

    @wraps(func)
    def result(*args: Any, **kwargs: Any) -> int:
        try:
            return func(*args, **kwargs)
        except (ElasticaException, MissingConfig) as exc:
            report = {
                "error": type(exc).__name__,
                "message": getattr(exc, "message", str(exc)),
                "key": getattr(exc, "key", None),
            }
            click.echo(json.dumps(report), err=True)
            logger.error("%s failed with %s", Verbatim(func.__name__), Verbatim(type(exc).__name__))
            return exit_code_for(exc)

    return result


def _writer_for(config_path: str, run_config: RunConfiguration) -> RunWriter:
    run_dir = os.path.join(resolve_out_dir(run_config.out_dir, config), run_name(config_path))
    return RunWriter(run_dir, run_config.grid, run_config.model.omega)


@reports_errors
def cmd_flow(config_path: str) -> int:
    """Run the flow described by a run file and write its outputs."""
    run_config = load_run_configuration(config_path)
    grid = run_config.grid
    initial = build_initial_state(run_config.initial, run_config.model, grid, run_config.seed)
    writer = _writer_for(config_path, run_config)
    try:
        trajectory = run_flow(initial, run_config.model, grid, run_config.flow, writer)
    except ElasticaException as exc:
        writer.close()
        writer.write_meta(run_config.resolved(), error=type(exc).__name__, message=exc.message)
        raise
    writer.close()
    final_state = trajectory.final_state or initial
    writer.write_final_state(final_state)
    last = trajectory.rows[-1]
    writer.write_meta(
        run_config.resolved(),
        stop_reason=trajectory.stop_reason.value if trajectory.stop_reason else None,
        steps=int(last["step"]),
        t=float(last["t"]),
        energy=float(last["E"]),
        snapshots=len(trajectory),
        classification=classify_state(final_state, run_config.model, grid).value,
    )
    return EXIT_OK


@reports_errors
def cmd_minimize(config_path: str) -> int:
    """Solve for a constrained critical point from the configured initial datum."""
    run_config = load_run_configuration(config_path)
    grid = run_config.grid
    guess = build_initial_state(run_config.initial, run_config.model, grid, run_config.seed)
    critical_point = solve_stationary(guess, run_config.model, grid)
    writer = _writer_for(config_path, run_config)
    writer.write_final_state(critical_point.state)
    writer.write_meta(
        run_config.resolved(),
        classification=critical_point.classification.value,
        residual_norm=critical_point.residual_norm,
        iterations=critical_point.iterations,
        multipliers=list(critical_point.multipliers.as_tuple()),
    )
    click.echo(
        json.dumps(
            {
                "classification": critical_point.classification.value,
                "residual_norm": critical_point.residual_norm,
            }
        )
    )
    return EXIT_OK


@reports_errors
def cmd_check(state_path: str, config_path: str) -> int:
    """Print the diagnostics of a state file as one JSON object."""
    run_config = load_run_configuration(config_path)
    state = load_state(state_path, run_config.grid, run_config.model)
    report = state_report(state, run_config.model, run_config.grid, run_config.flow.symmetry_k)
    click.echo(json.dumps(report, indent=2))
    return EXIT_OK


def cmd_batch(config_paths: List[str]) -> int:
    """Independent flow runs on dask's threaded scheduler; the exit code is
    the largest one of the runs."""
    tasks = [dask.delayed(cmd_flow)(path) for path in config_paths]
    codes = dask.compute(*tasks, scheduler="threads")
    return max(codes, default=EXIT_OK)


@click.group()
@click.option("--log-level", default=None, help="Overrides the [logging] LEVEL setting.")
@click.pass_context
def cli(ctx: click.Context, log_level: str) -> None:
    """elastica CLI"""
    ctx.ensure_object(dict)
    configure_logging(log_level or config.logging.LEVEL, config.logging.LOG_ARRAYS)


@cli.command()
@click.argument("config_path", type=click.Path(dir_okay=False))
def flow(config_path: str) -> None:
    """
    Runs the gradient flow and writes trace, snapshots and metadata.
    """
    sys.exit(cmd_flow(config_path))


@cli.command()
@click.argument("config_path", type=click.Path(dir_okay=False))
def minimize(config_path: str) -> None:
    """
    Solves for a critical point and classifies it.
    """
    sys.exit(cmd_minimize(config_path))


@cli.command()
@click.argument("state_path", type=click.Path(dir_okay=False))
@click.argument("config_path", type=click.Path(dir_okay=False))
def check(state_path: str, config_path: str) -> None:
    """
    Prints energy, constraints, multipliers and curve diagnostics of a state.
    """
    sys.exit(cmd_check(state_path, config_path))


@cli.command()
@click.argument("config_paths", nargs=-1, required=True, type=click.Path(dir_okay=False))
def batch(config_paths: List[str]) -> None:
    """
    Runs several flow configurations concurrently.
    """
    sys.exit(cmd_batch(list(config_paths)))
