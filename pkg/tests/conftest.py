import pytest
from hypothesis import strategies as st

ALPHABET = "abcd"


def words(alphabet=ALPHABET, min_size=0, max_size=10):
    return st.text(alphabet=alphabet, min_size=min_size, max_size=max_size)


@pytest.fixture(scope="session")
def counterexample():
    return "abbb", "aab", "ab"


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")


_acceptance = []
