from pathlib import Path

import pytest

DATA = Path(__file__).resolve().parent.parent / "demos" / "data"

# (criterion, passed, seconds, limit) rows filled in by test_acceptance
GATE_RESULTS = []


@pytest.fixture
def data_dir() -> Path:
    return DATA


def pytest_terminal_summary(terminalreporter):
    if not GATE_RESULTS:
        return
    terminalreporter.section("acceptance gate")
    for name, ok, secs, limit in sorted(GATE_RESULTS, key=lambda r: int(r[0].split(".")[0])):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  ({secs:.2f}s, limit {limit:g}s)")
