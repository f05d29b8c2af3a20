import pytest

from kemenum import Profile

# Lines recorded by test_acceptance.py, echoed in the terminal summary.
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def cyclic():
    return Profile(3, ((0, 1, 2), (1, 2, 0), (2, 0, 1)))


@pytest.fixture
def reversal():
    return Profile(3, ((0, 1, 2), (2, 1, 0)))


@pytest.fixture
def block():
    # c1 c2 d1 d2 = 0 1 2 3; the two blocks swap places.
    return Profile(4, ((0, 1, 2, 3), (2, 3, 0, 1)))


@pytest.fixture
def swap():
    return Profile(4, ((0, 1, 2, 3), (1, 0, 3, 2)))


@pytest.fixture
def unanimous():
    return Profile(5, ((3, 0, 4, 1, 2),) * 3)
