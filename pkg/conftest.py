"""Shared pytest configuration.

Hypothesis profiles: ``default`` for the everyday run and ``acceptance``
for the long property run, chosen with ``HYPOTHESIS_PROFILE``.
"""
import os

import pytest
from hypothesis import HealthCheck, settings

from scan.domain.entities import ScanConfig
from scan.domain.services import EnumerationService

settings.register_profile("default", max_examples=60, deadline=None)
settings.register_profile(
    "acceptance",
    max_examples=10000,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))

ADMISSIBLE_D_MAX = 60 if os.getenv("HYPOTHESIS_PROFILE") == "acceptance" else 14


@pytest.fixture(autouse=True)
def isolated_environment(monkeypatch):
    """Keep a developer's ORLIK_* variables out of the tests."""
    for name in ("ORLIK_JOBS", "ORLIK_SCAN_OUTPUT", "ORLIK_SUBSET_BOUND", "ORLIK_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture(scope="session")
def admissible_systems():
    """Every reduced (C1) system with up to three variables and d <= ADMISSIBLE_D_MAX."""
    return [
        ws
        for n in (1, 2, 3)
        for ws in EnumerationService.enumerate_weight_systems(
            ScanConfig(n=n, d_max=ADMISSIBLE_D_MAX, mu_max=10 ** 6, mode='exhaustive')
        )
    ]


@pytest.fixture
def scan_output(tmp_path):
    return str(tmp_path / "results" / "scan.jsonl")
