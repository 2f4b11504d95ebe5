import random

import pytest

from planarmono import build_field
from planarmono.runner import Runner
from planarmono.verifiers import Verifier


@pytest.fixture
def gf3():
    return build_field(3)


@pytest.fixture
def gf5():
    return build_field(5)


@pytest.fixture
def gf7():
    return build_field(7)


@pytest.fixture
def gf9():
    return build_field(3, 2)


@pytest.fixture
def gf8():
    return build_field(2, 3)


@pytest.fixture
def rng():
    return random.Random(20240229)


@pytest.fixture
def runner():
    return Runner(1)


@pytest.fixture
def verifier():
    return Verifier(k_max=5)
