import json
import time
from pathlib import Path

import pytest

GOLDEN = Path(__file__).parent / "data" / "golden.json"
SUITE_BUDGET_S = 60.0


@pytest.fixture(scope="session")
def golden():
    return json.loads(GOLDEN.read_text())


def pytest_configure(config):
    config._acceptance_lines = []
    config._t0 = time.perf_counter()


@pytest.fixture
def criterion(request):
    """Record one acceptance line: ``criterion(number, title, ok, detail)``."""

    def record(number, title, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title}"
        if detail:
            line += f" ({detail})"
        request.config._acceptance_lines.append((number, line))
        print(line)
        return ok

    return record


def pytest_sessionfinish(session, exitstatus):
    # the runtime budget is part of the acceptance contract
    session.config._elapsed = time.perf_counter() - session.config._t0
    if session.config._acceptance_lines and session.config._elapsed >= SUITE_BUDGET_S:
        session.exitstatus = 1


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config._acceptance_lines
    if not lines:
        return
    elapsed = getattr(config, "_elapsed", time.perf_counter() - config._t0)
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(lines):
        terminalreporter.write_line(line)
    ok = elapsed < SUITE_BUDGET_S
    terminalreporter.write_line(
        f"[{'PASS' if ok else 'FAIL'}] suite runtime {elapsed:.1f} s (budget {SUITE_BUDGET_S:.0f} s)"
    )
