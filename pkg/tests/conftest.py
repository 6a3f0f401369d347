import pytest

from troprays.instances import M1, m1_family, m1_interval


@pytest.fixture(scope="session")
def m1():
    return M1


@pytest.fixture(scope="session")
def m1_iv():
    return m1_interval()


@pytest.fixture(scope="session")
def m1_fam():
    return m1_family()
