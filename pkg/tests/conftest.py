import pytest

from hypermaps import k_klein, p2, t_torus


@pytest.fixture(scope="session")
def K():
    return k_klein()


@pytest.fixture(scope="session")
def T():
    return t_torus()


@pytest.fixture(scope="session")
def P2():
    return p2()


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
