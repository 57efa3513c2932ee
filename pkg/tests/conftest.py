import pytest
from hypothesis import HealthCheck, settings

from lieforge import corpus

settings.register_profile(
    "default",
    settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]),
)
settings.register_profile("ci", settings(max_examples=200, deadline=None))
settings.load_profile("default")


@pytest.fixture(scope="session")
def load():
    return corpus.load


@pytest.fixture(scope="session")
def h3():
    return corpus.load("h3")


@pytest.fixture(scope="session")
def sl2():
    return corpus.load("sl2")


@pytest.fixture(scope="session")
def aff1():
    return corpus.load("aff1")


@pytest.fixture(scope="session")
def rotation5():
    return corpus.load("rotation-5")


@pytest.fixture(scope="session")
def abelian3():
    return corpus.load("abelian-3")
