import time

import pytest

from signed_tutte.sgraph import SignedGraph

_START = time.perf_counter()
SUITE_BUDGET_S = 300


def graph(n, edges):
    return SignedGraph.from_list(n, edges)


@pytest.fixture
def report(capsys):
    """Print one line past pytest's capture."""

    def emit(line):
        with capsys.disabled():
            print("\n" + line)

    return emit


def pytest_terminal_summary(terminalreporter):
    elapsed = time.perf_counter() - _START
    status = "PASS" if elapsed < SUITE_BUDGET_S else "FAIL"
    terminalreporter.write_line(f"{status} full suite wall time {elapsed:.1f}s (budget {SUITE_BUDGET_S}s)")
