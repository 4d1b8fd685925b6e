import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from weylp import FieldSpec


@pytest.fixture(scope="session")
def f2():
    return FieldSpec(2)


@pytest.fixture(scope="session")
def f3():
    return FieldSpec(3)


@pytest.fixture(scope="session")
def f4():
    return FieldSpec(2, 2, (1, 1, 1))


@pytest.fixture(scope="session")
def f5():
    return FieldSpec(5)


@pytest.fixture(scope="session")
def f9():
    return FieldSpec(3, 2)
