import logging
from typing import Generator

import pytest

from .fixtures import *

logger = logging.getLogger(__name__)


@pytest.fixture(autouse=True)
def out_dir(tmp_path, monkeypatch) -> Generator:
    """Every run directory goes below the test's tmp_path."""
    target = tmp_path / "runs"
    monkeypatch.setenv("ELASTICA_OUT", str(target))
    logger.debug("Run output redirected to %s", target)
    yield target
