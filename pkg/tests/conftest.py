import pytest

from support import load


@pytest.fixture
def borromean():
    return load("borromean.json")


@pytest.fixture
def one_crossing():
    return load("one_crossing.json")
