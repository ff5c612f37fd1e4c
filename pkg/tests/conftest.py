import pytest

from torelli_euler import bernoulli_table


@pytest.fixture(scope="session")
def table600():
    return bernoulli_table(600)


@pytest.fixture(scope="session")
def table60():
    return bernoulli_table(60)
