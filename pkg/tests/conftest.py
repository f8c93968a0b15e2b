"""Test configuration and shared fixtures."""

import sys
from pathlib import Path

import pytest
from loguru import logger

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from taylorlike.config.schema import Config  # noqa: E402
from taylorlike.functions.registry import lookup  # noqa: E402
from taylorlike.heat.problem import sine_problem  # noqa: E402


@pytest.fixture(scope="session")
def project_path():
    """Return the project root path."""
    return Path(__file__).parent.parent


@pytest.fixture
def settings():
    """Default configuration (no config.json involved)."""
    return Config()


@pytest.fixture
def cubic():
    return lookup("poly3")


@pytest.fixture
def bump():
    return lookup("bump")


@pytest.fixture
def sine_heat():
    """e^{-pi^2 t} sin(pi x) on [0, 1] up to T = 0.1."""
    return sine_problem(T=0.1)


@pytest.fixture(autouse=True)
def _restore_logging():
    """The CLI callback rebinds loguru to the runner's stderr; undo that after each test."""
    yield
    logger.remove()
    logger.add(sys.stderr, level="WARNING")
