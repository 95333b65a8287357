import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from exseq import QuiverDescriptor, build_root_system


@pytest.fixture(scope="session")
def a1():
    return build_root_system(QuiverDescriptor.standard("A", 1))


@pytest.fixture(scope="session")
def a2():
    return build_root_system(QuiverDescriptor.standard("A", 2))


@pytest.fixture(scope="session")
def a3():
    return build_root_system(QuiverDescriptor.standard("A", 3))


@pytest.fixture(scope="session")
def d4():
    return build_root_system(QuiverDescriptor.standard("D", 4))


@pytest.fixture(scope="session")
def b2():
    return build_root_system(QuiverDescriptor("B", 2))
