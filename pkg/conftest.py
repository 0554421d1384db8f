"""
Shared pytest configuration for the Tamari Engine tests.
"""

import os
import random

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("ci", max_examples=200, deadline=None, derandomize=True)
settings.register_profile(
    "dev", max_examples=30, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "dev"))


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=20240601, help="seed for the random operand suites")


@pytest.fixture
def rng(request):
    return random.Random(request.config.getoption("--seed"))
