import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from eulerium import EvalConfig  # noqa: E402


@pytest.fixture(scope="session")
def cfg():
    return EvalConfig(digits=30, tol=1e-15)


@pytest.fixture(scope="session")
def cfg_default():
    return EvalConfig()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
