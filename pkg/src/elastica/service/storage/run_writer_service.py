import json
import logging
import os
from datetime import datetime, timezone
from typing import Any, Dict, List

import pandas as pd

from elastica.core.config import config, get_settings_summary
from elastica.model.grid import Grid, State
from elastica.service.flow.flow_diagnostics import TRACE_COLUMNS
from elastica.service.flow.flow_observer import Row
from elastica.service.initdata.state_io import save_state, snapshot_frame, write_csv
from elastica.util.logger import Verbatim

logger = logging.getLogger(__name__)

TRACE_FILE = "trace.csv"
META_FILE = "meta.json"
FINAL_STATE_FILE = "final_state.csv"


def snapshot_file_name(index: int) -> str:
    return f"snapshot_{index:06d}.csv"


class RunWriter:
    """Writes the files of one run directory. Trace rows are buffered and
    flushed at every snapshot and on close."""

    def __init__(self, run_dir: str, grid: Grid, omega: int):
        self.run_dir = run_dir
        self.grid = grid
        self.omega = omega
        self._pending: List[Row] = []
        self._trace_started = False
        os.makedirs(run_dir, exist_ok=True)
        logger.info("Writing run output to %s", Verbatim(run_dir))

    def path(self, name: str) -> str:
        return os.path.join(self.run_dir, name)

    def on_step(self, row: Row) -> None:
        self._pending.append(row)

    def on_snapshot(self, index: int, state: State, row: Row) -> None:
        self.flush()
        write_csv(snapshot_frame(state, self.grid, self.omega), self.path(snapshot_file_name(index)))

    def flush(self) -> None:
        """Append buffered rows to trace.csv"""
        if not self._pending and self._trace_started:
            return
        frame = pd.DataFrame(self._pending, columns=TRACE_COLUMNS)
        frame.to_csv(
            self.path(TRACE_FILE),
            mode="a" if self._trace_started else "w",
            header=not self._trace_started,
            index=False,
            encoding="utf-8",
            float_format="%.17g",
            lineterminator="\n",
        )
        self._trace_started = True
        self._pending = []

    def write_final_state(self, state: State, name: str = FINAL_STATE_FILE) -> None:
        save_state(state, self.path(name), self.grid)

    def write_meta(self, resolved_config: Dict[str, Any], **results: Any) -> None:
        """meta.json; `created_at` is the only field depending on the wall clock"""
        meta = {
            "config": resolved_config,
            "settings": get_settings_summary(config),
            "results": results,
            "created_at": datetime.now(timezone.utc).isoformat(),
        }
        with open(self.path(META_FILE), "w", encoding="utf-8", newline="\n") as meta_file:
            json.dump(meta, meta_file, indent=2, sort_keys=True)
            meta_file.write("\n")

    def close(self) -> None:
        self.flush()
