import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile(
    "ci",
    derandomize=True,
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")


@pytest.fixture(scope="session")
def surfaces():
    from capstar.fixtures import surfaces

    return surfaces()


@pytest.fixture(scope="session")
def pairs():
    from capstar.fixtures import pair_models

    return pair_models()
