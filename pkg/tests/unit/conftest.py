import logging
from pathlib import Path

import numpy as np
import pytest

from qcanon.domain.models import GeneralLinearFunction
from qcanon.storage.documents import read_function
from qcanon.utils.logging import PACKAGE_LOGGER

FIXTURES_ROOT = Path(__file__).resolve().parents[1] / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES_ROOT


@pytest.fixture
def load_fixture():
    def _load(name: str) -> GeneralLinearFunction:
        return read_function(FIXTURES_ROOT / name)

    return _load


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture(autouse=True)
def restore_package_logger():
    # the CLI attaches a handler bound to the stderr of the running test
    package_logger = logging.getLogger(PACKAGE_LOGGER)
    handlers = list(package_logger.handlers)
    level = package_logger.level
    yield
    package_logger.handlers = handlers
    package_logger.setLevel(level)
