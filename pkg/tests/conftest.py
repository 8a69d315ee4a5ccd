import pytest

from ecwalk.curve import CurveParams
from ecwalk.params import DomainParams, build_domain_params, curve_search


@pytest.fixture(scope="session")
def e17():
    return CurveParams.of(17, 2, 2)


@pytest.fixture(scope="session")
def E17(e17):
    """The textbook tuple (17, 2, 2, (5, 1), 19, 1)."""
    return DomainParams(e17, e17.point(5, 1), 19, 1)


@pytest.fixture(scope="session")
def f5():
    return CurveParams.of(5, 1, 1)


@pytest.fixture(scope="session")
def F5(f5):
    return build_domain_params(f5)


@pytest.fixture(scope="session")
def big():
    """A prime-order curve over a field with p > 10^3."""
    (params,) = curve_search(10007, 10007, want_prime_order=True)
    return params


_acceptance: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome.upper()))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{outcome:<7} {name}")
