import os
import random

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "ci",
    deadline=None,
    max_examples=120,
    suppress_health_check=[HealthCheck.too_slow],
    derandomize=True,
)
settings.load_profile("ci")

EXTENDED = os.environ.get("GTSLAB_EXTENDED") == "1"


@pytest.fixture
def rng():
    return random.Random(20240817)


def pytest_configure(config):
    config.addinivalue_line("markers", "extended: slow sweeps enabled via GTSLAB_EXTENDED=1")
