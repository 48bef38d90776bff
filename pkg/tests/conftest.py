import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from rednum import Ring


@pytest.fixture
def R1():
    return Ring(["x"])


@pytest.fixture
def R2():
    return Ring(["x", "y"])


@pytest.fixture
def R3():
    return Ring(["x", "y", "z"])
