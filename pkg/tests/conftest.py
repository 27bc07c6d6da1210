import math

import pytest
from hypothesis import HealthCheck, settings

from rnwarp import BlackHoleParams

settings.register_profile(
    "suite",
    max_examples=50,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")

PI_2 = math.pi / 2.0


@pytest.fixture
def charged():
    """The workhorse configuration: comfortably nonextremal, r = 1 interior."""
    return BlackHoleParams(1.0, 0.6)


@pytest.fixture
def schwarzschild():
    return BlackHoleParams(1.0, 0.0)
