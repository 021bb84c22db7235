import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

from biquat.field_core import make_field  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def F2():
    return make_field(1)


@pytest.fixture(scope="session")
def F4():
    return make_field(2)


@pytest.fixture(scope="session")
def F2t():
    return make_field(1, None, ("t",))


@pytest.fixture(scope="session")
def F4t():
    return make_field(2, None, ("t",))


@pytest.fixture(scope="session")
def F2st():
    return make_field(1, None, ("s", "t"))
