import pytest

from isoclass.census import census


@pytest.fixture(scope="session")
def table_5():
    return census(5)


@pytest.fixture(scope="session")
def table_101():
    return census(101)


@pytest.fixture(scope="session")
def table_1009():
    return census(1009)


@pytest.fixture(scope="session")
def table_10007():
    # ~25 s; shared by the theorem/Sato-Tate acceptance criteria
    return census(10007, threads=2)
