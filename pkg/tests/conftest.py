import pytest

from cyclesmith.generators import bundled_corpus, named


@pytest.fixture(scope="session")
def corpus():
    """Every 2-connected graph on 3..8 vertices up to isomorphism."""
    return bundled_corpus("biconnected_3-8")


@pytest.fixture(scope="session")
def claw_free_corpus():
    """Every claw-free 2-connected graph on 3..9 vertices up to isomorphism."""
    return bundled_corpus("clawfree_biconnected_3-9")


@pytest.fixture
def petersen():
    return named("petersen")


@pytest.fixture
def k23():
    return named("complete_bipartite", a=2, b=3)


_acceptance: list[tuple[str, str, str]] = []


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        detail = "; ".join(f"{k}={v}" for k, v in report.user_properties)
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome.upper(), detail))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, detail in _acceptance:
        status = "PASS" if outcome == "PASSED" else "FAIL"
        terminalreporter.write_line(f"[{status}] {name}  {detail}")
