import pytest

from helpers import ht32, ht_unchecked


@pytest.fixture
def ht32_graph():
    return ht32()


@pytest.fixture
def h54():
    return ht_unchecked(5, 4)


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[number])
