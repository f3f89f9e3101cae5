import pytest

from cayleylab import aut
from cayleylab.cayley import build_cayley, preset_generators


@pytest.fixture(scope="session")
def X3():
    return build_cayley(3, preset_generators(3, "complete"))


@pytest.fixture(scope="session")
def X4():
    return build_cayley(4, preset_generators(4, "complete"))


@pytest.fixture(scope="session")
def X5():
    return build_cayley(5, preset_generators(5, "complete"))


@pytest.fixture(scope="session")
def G3(X3):
    return aut.automorphism_group(X3)


@pytest.fixture(scope="session")
def G4(X4):
    return aut.automorphism_group(X4)


@pytest.fixture(scope="session")
def G5(X5):
    return aut.automorphism_group(X5)


@pytest.fixture(scope="session")
def star4():
    return build_cayley(4, preset_generators(4, "star"))


@pytest.fixture(scope="session")
def G_star4(star4):
    return aut.automorphism_group(star4)


@pytest.fixture(scope="session")
def path4():
    return build_cayley(4, preset_generators(4, "path"))


@pytest.fixture(scope="session")
def cycle4():
    return build_cayley(4, preset_generators(4, "cycle"))


@pytest.fixture(scope="session")
def cycle5():
    return build_cayley(5, preset_generators(5, "cycle"))
