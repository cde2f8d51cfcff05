from __future__ import annotations

import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

from eulersums.numerics import PrecisionContext  # noqa: E402
from eulersums.table import default_table  # noqa: E402

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow], derandomize=True
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def ctx30() -> PrecisionContext:
    return PrecisionContext(target_digits=30)


@pytest.fixture(scope="session")
def table():
    return default_table()
