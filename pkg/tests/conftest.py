from __future__ import annotations

import pytest

from qcjordan.model_set import enumerate_points, preset

DESK = {
    "fibonacci-palindromic": 9,
    "penrose": 3,
    "z6": 2,
    "elser-sloane": 3,
}


@pytest.fixture(scope="session")
def batches():
    """Desk-radius model sets for the four concrete schemes, computed once."""
    return {name: (preset(name), enumerate_points(preset(name), r)) for name, r in DESK.items()}


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion, in order."""
    import sys

    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
