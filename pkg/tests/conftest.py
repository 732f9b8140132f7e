import sys

import pytest

from epicalc import Tolerance, get_calculus


@pytest.fixture(scope="session")
def cf():
    return get_calculus("CF")


@pytest.fixture(scope="session")
def pt():
    return get_calculus("PT")


@pytest.fixture(scope="session")
def ptb():
    return get_calculus("PTB")


@pytest.fixture(scope="session")
def ip():
    return get_calculus("IP")


@pytest.fixture(scope="session")
def lr():
    return get_calculus("LR")


@pytest.fixture(scope="session")
def ptmax():
    return get_calculus("PTMAX")


@pytest.fixture(scope="session")
def quick():
    """Reduced sampling effort for unit tests; acceptance uses the defaults."""
    return Tolerance(sample_count=2000, grid_resolution=256, seed=7)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
