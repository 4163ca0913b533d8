import os
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def repo_root():
    return Path(__file__).resolve().parent.parent


# one line per acceptance criterion, repeated in the terminal summary so
# that the pass/fail list is visible without ``-s``
ACCEPTANCE_LINES = []


@pytest.fixture
def criterion():
    def record(label, failures, detail=""):
        status = "PASS" if not failures else "FAIL"
        line = f"{status} {label}" + (f" ({detail})" if detail else "")
        if failures:
            line += ": " + "; ".join(failures)
        print(line)
        ACCEPTANCE_LINES.append(line)
        assert not failures, line

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
