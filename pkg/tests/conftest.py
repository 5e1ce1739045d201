import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gasmatch.model import builtin_scenario


@pytest.fixture(scope="session")
def scenario1():
    return builtin_scenario("scenario1")


@pytest.fixture(scope="session")
def scenario2():
    return builtin_scenario("scenario2")
