from typing import Any, Dict, List, Protocol, Tuple

from elastica.model.grid import State

Row = Dict[str, Any]


class FlowObserver(Protocol):
    """Receives trace rows and snapshots from a flow run"""

    def on_step(self, row: Row) -> None:
        ...

    def on_snapshot(self, index: int, state: State, row: Row) -> None:
        ...


class InMemoryObserver:
    """Collects everything a run emits, used by tests and by `check`"""

    def __init__(self) -> None:
        self.rows: List[Row] = []
        self.snapshots: List[Tuple[int, State, Row]] = []

    def on_step(self, row: Row) -> None:
        self.rows.append(row)

    def on_snapshot(self, index: int, state: State, row: Row) -> None:
        self.snapshots.append((index, state, row))
