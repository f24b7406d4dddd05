import contextlib
import os
import time

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion():
    """``with criterion(n, title) as notes:`` records one PASS/FAIL line.

    Strings appended to ``notes`` are shown after the verdict.
    """

    @contextlib.contextmanager
    def run(number: int, title: str):
        notes: list[str] = []
        start = time.perf_counter()
        ok = False
        try:
            yield notes
            ok = True
        finally:
            elapsed = time.perf_counter() - start
            extra = f" [{'; '.join(notes)}]" if notes else ""
            line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({elapsed:.1f}s){extra}"
            ACCEPTANCE_LINES.append(line)
            print(line)

    return run


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
