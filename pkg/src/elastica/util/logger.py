import logging
import os
from typing import Any, Mapping, Tuple, Union

import numpy as np

ARRAY_SUMMARY = "ndarray(shape={}, min={:.6g}, max={:.6g})"


class Verbatim(str):
    """mark a log argument that is always printed as is"""


def get_elastica_log_record_factory() -> Any:
    """intercepts default LogRecord to keep large arrays out of the logs"""

    def factory(  # pylint: disable=R0913
        name: str,
        level: int,
        fn: str,
        lno: int,
        msg: str,
        args: Union[Tuple[Any, ...], Mapping[str, Any]],
        exc_info: Any,
        func: str = None,
        sinfo: str = None,
    ) -> logging.LogRecord:
        env_log_arrays: bool = os.getenv("LOG_ARRAYS") == "True"
        new_args = args
        if not env_log_arrays and isinstance(args, tuple):
            new_args = tuple(_summarize_arrays_for_logs(arg) for arg in args)
        return logging.LogRecord(
            name=name,
            level=level,
            pathname=fn,
            lineno=lno,
            msg=msg,
            args=new_args,
            exc_info=exc_info,
            func=func,
            sinfo=sinfo,
        )

    return factory


def _summarize_arrays_for_logs(arg: Any) -> Any:
    """
    :param arg: log parameter that may be a (large) numpy array
    :return: a one line summary for arrays, the parameter itself otherwise
    """
    if isinstance(arg, Verbatim) or not isinstance(arg, np.ndarray):
        return arg
    if arg.size == 0 or not np.issubdtype(arg.dtype, np.number):
        return f"ndarray(shape={arg.shape})"
    return ARRAY_SUMMARY.format(arg.shape, float(np.min(arg)), float(np.max(arg)))


def configure_logging(level: str = "INFO", log_arrays: bool = False) -> None:
    """Install the record factory and the root handler used by the cli."""
    if log_arrays:
        os.environ["LOG_ARRAYS"] = "True"
    logging.basicConfig(level=getattr(logging, level.upper(), logging.INFO))
    logging.setLogRecordFactory(get_elastica_log_record_factory())
