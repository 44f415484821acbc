import pytest

from moncatkit.fixtures import builtin_fixtures


@pytest.fixture(scope="session")
def fx():
    return builtin_fixtures()


@pytest.fixture(scope="session")
def ns2(fx):
    return fx.models["ns2"]


@pytest.fixture(scope="session")
def trivial(fx):
    return fx.models["trivial"]


@pytest.fixture(scope="session")
def thin(fx):
    return fx.models["thin"]


@pytest.fixture(scope="session")
def thin3(fx):
    return fx.models["thin3"]


@pytest.fixture(scope="session")
def words3(fx):
    return fx.models["words3"]


@pytest.fixture(scope="session")
def mat7(fx):
    return fx.models["mat7"]
