"""Shared fixtures for the wwlab test suites."""

import os

import pytest

from core.partitions import parse_partition

WORKED_LAMBDA = "8d+8a+6c+5c+3d+1a"
WORKED_MU = "8c+8c+7c+5c+3c+2c+2c+1c+1c"
WORKED_NU1 = "8d+8b+8b+8a+7b+6c+5c+5b+3d+3b+2b+2b+1b+1b+1a"
WORKED_NU2 = "8d+8c+8c+8a+7b+6c+5c+5b+3d+3c+2b+2b+1c+1c+1a"
WORKED_NU3 = "8d+8c+8c+8a+7b+6c+5c+5c+3d+3c+2b+2b+1c+1c+1a"


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full acceptance sizes (deselect with -m 'not slow')")


@pytest.fixture
def worked_lambda():
    return parse_partition(WORKED_LAMBDA)


@pytest.fixture
def worked_mu():
    return parse_partition(WORKED_MU)


@pytest.fixture
def worked_nu():
    return parse_partition(WORKED_NU3)


@pytest.fixture(autouse=True)
def _isolated_env(monkeypatch):
    """Keep a developer's WWLAB_* variables out of the tests."""
    for key in list(os.environ):
        if key.startswith("WWLAB_"):
            monkeypatch.delenv(key)
