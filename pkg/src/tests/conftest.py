from __future__ import annotations

import pytest

from src.app.logging import setup_logging


@pytest.fixture(autouse=True, scope="session")
def _quiet_logging():
    setup_logging("WARNING")
    yield


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    for name in (
        "CONVEXPOLY_LOG_LEVEL",
        "CONVEXPOLY_EPS",
        "CONVEXPOLY_SEED",
        "CONVEXPOLY_MODE",
        "CONVEXPOLY_SQRT_PRECISION",
        "CONVEXPOLY_EXHAUSTIVE_GRID_LIMIT",
        "CONVEXPOLY_ELLIPSOID_MIN_PRECISION",
    ):
        monkeypatch.delenv(name, raising=False)
