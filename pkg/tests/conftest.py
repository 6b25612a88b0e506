import pytest

from oddturan.graph import complete_graph, cycle_graph

_acceptance: list[tuple[str, str, float]] = []


@pytest.fixture(scope="session")
def C5():
    return cycle_graph(5)


@pytest.fixture(scope="session")
def K3():
    return complete_graph(3)


@pytest.fixture(scope="session")
def K4():
    return complete_graph(4)


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, secs in _acceptance:
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}  ({secs:.1f}s)")
