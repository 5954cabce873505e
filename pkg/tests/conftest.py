import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(Path(__file__).parent))

# acceptance results, printed once at the end of the session
ACCEPTANCE: list[str] = []


@pytest.fixture
def corpus() -> Path:
    return ROOT / "corpus"


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
