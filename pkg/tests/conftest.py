"""
Pytest configuration and shared fixtures for kummerx tests.
"""

import shutil
import tempfile
from pathlib import Path

import pytest

from kummerx.config.models import RunConfig


@pytest.fixture
def temp_dir():
    """Create a temporary directory for tests."""
    temp_dir = tempfile.mkdtemp()
    yield Path(temp_dir)
    shutil.rmtree(temp_dir)


@pytest.fixture
def isolated_env(temp_dir, monkeypatch):
    """Run in an empty working directory with no cache override in the environment."""
    monkeypatch.chdir(temp_dir)
    monkeypatch.delenv("KUMMERX_CACHE", raising=False)
    monkeypatch.delenv("KUMMERX_VERBOSE", raising=False)
    return temp_dir


@pytest.fixture
def run_config():
    """Default configuration with an in-memory cache."""
    return RunConfig(cache_path=None)
