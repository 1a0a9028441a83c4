import pytest

from vlogic import canonical_basis


@pytest.fixture
def set1():
    return canonical_basis("SET1")


@pytest.fixture
def set2():
    return canonical_basis("SET2")


@pytest.fixture
def dim4():
    return canonical_basis("DIM4")
