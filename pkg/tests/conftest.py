from contextlib import contextmanager
from time import perf_counter

import pytest

_lines = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_lines] = []


@pytest.fixture
def criterion(request):
    """``with criterion("label", seconds):`` records PASS/FAIL plus runtime
    and fails the test if the body raises or overruns the limit."""
    lines = request.config.stash[_lines]

    @contextmanager
    def check(label, limit=None):
        start = perf_counter()
        ok = False
        try:
            yield
            ok = True
        finally:
            elapsed = perf_counter() - start
            in_time = limit is None or elapsed < limit
            budget = f", limit {limit:g}s" if limit is not None else ""
            status = "PASS" if ok and in_time else "FAIL"
            lines.append(f"[{status}] {label} ({elapsed:.2f}s{budget})")
        assert in_time, f"{label}: took {elapsed:.2f}s, limit {limit}s"

    return check


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_lines, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
