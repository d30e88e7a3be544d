import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from agq.curve import hermitian_curve, superelliptic_curve
from agq.gf import field, quadratic_tower


@pytest.fixture(scope="session")
def f4():
    return field(2, 2)


@pytest.fixture(scope="session")
def f9():
    return field(3, 2)


@pytest.fixture(scope="session")
def tower2():
    return quadratic_tower(2)


@pytest.fixture(scope="session")
def tower3():
    return quadratic_tower(3)


@pytest.fixture(scope="session")
def herm2():
    return hermitian_curve(2)


@pytest.fixture(scope="session")
def se33():
    return superelliptic_curve(3, 3)
