"""Session-level test fixtures and utilities.

These fixtures in this module are automatically applied to the test session
through pytest's autouse mechanism. Pyrig automatically adds this module to
pytest_plugins in conftest.py. However you still have decorate the fixture
with @autouse_session_fixture from pyrig.src.testing.fixtures or with pytest's
autouse mechanism @pytest.fixture(scope="session", autouse=True).
"""

import pytest
from hypothesis import HealthCheck, settings

HYPOTHESIS_PROFILE = "polyop"

settings.register_profile(
    HYPOTHESIS_PROFILE,
    max_examples=60,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)


@pytest.fixture(scope="session", autouse=True)
def hypothesis_profile() -> str:
    """Load the deterministic hypothesis profile for the whole session."""
    settings.load_profile(HYPOTHESIS_PROFILE)
    return HYPOTHESIS_PROFILE
