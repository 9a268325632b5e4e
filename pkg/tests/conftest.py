import pytest

from kummer3.report import duality_report, inclusion_diagram, verify_tables


@pytest.fixture(scope="session")
def duality():
    return duality_report(3)


@pytest.fixture(scope="session")
def diagram():
    return inclusion_diagram(3)


@pytest.fixture(scope="session")
def verification():
    return verify_tables()
