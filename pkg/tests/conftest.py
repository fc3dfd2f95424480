"""
Test configuration and fixtures for the butson package
"""

import pytest

from butson.config import get_settings
from butson.conjecture.examples import builtin_examples
from butson.matrices.models import RootMatrix


@pytest.fixture(autouse=True)
def fresh_settings():
    """Re-read settings from the (possibly monkeypatched) environment in every test"""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def ex1() -> RootMatrix:
    """BH(2,4) with k = 24"""
    return builtin_examples()["ex1"]


@pytest.fixture
def ex2() -> RootMatrix:
    """Circulant BH(5,5) counterexample"""
    return builtin_examples()["ex2"]


@pytest.fixture
def ex3() -> RootMatrix:
    """BH(4,2) with k = 3"""
    return builtin_examples()["ex3"]
