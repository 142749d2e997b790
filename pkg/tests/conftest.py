"""
Shared fixtures: family builds are expensive enough to reuse across modules.
"""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.generators.families import family_M, family_N
from src.generators.standard import cross_polytope, simplex_sphere
from src.utils.config import reset_config


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: d >= 4 constructions and long searches")


@pytest.fixture(autouse=True)
def fresh_config():
    """Command-line overrides write into the global config; start each test clean."""
    reset_config()
    yield
    reset_config()


@pytest.fixture(scope="session")
def m2():
    return family_M(2)


@pytest.fixture(scope="session")
def n2():
    return family_N(2)


@pytest.fixture(scope="session")
def m3():
    return family_M(3)


@pytest.fixture(scope="session")
def n3():
    return family_N(3)


@pytest.fixture(scope="session")
def m4():
    return family_M(4)


@pytest.fixture(scope="session")
def n4():
    return family_N(4)


@pytest.fixture(scope="session")
def octahedron():
    return cross_polytope(2)


@pytest.fixture
def tetrahedron_boundary():
    return simplex_sphere(2)
