import pytest

from extdim import fixtures as fx


@pytest.fixture(scope="session")
def ex1_A():
    return fx.algebra("ex1_A.alg")


@pytest.fixture(scope="session")
def ex1_B():
    return fx.algebra("ex1_B.alg")


@pytest.fixture(scope="session")
def ex2_A():
    return fx.algebra("ex2_A.alg")


@pytest.fixture(scope="session")
def ex2_B():
    return fx.algebra("ex2_B.alg")


@pytest.fixture(scope="session")
def ex3_A():
    return fx.algebra("ex3_A.alg")


@pytest.fixture(scope="session")
def ex3_B():
    return fx.algebra("ex3_B.alg")


@pytest.fixture(scope="session")
def ex1_P():
    return fx.complex_fixture("ex1_P.json")


@pytest.fixture(scope="session")
def ex2_P():
    return fx.complex_fixture("ex2_P.json")
