import contextlib
import time

import pytest

_ACCEPTANCE_LINES: list[tuple[int, str]] = []


@pytest.fixture
def acceptance():
    """Context manager recording one PASS/FAIL line per acceptance criterion,
    including a wall-clock limit check."""

    @contextlib.contextmanager
    def criterion(number: int, title: str, limit_s: float):
        start = time.perf_counter()
        try:
            yield
        except BaseException as exc:
            msg = str(exc).splitlines()[0][:160] if str(exc) else type(exc).__name__
            _ACCEPTANCE_LINES.append((number, f"criterion {number} FAIL: {title} ({msg})"))
            raise
        elapsed = time.perf_counter() - start
        if elapsed > limit_s:
            _ACCEPTANCE_LINES.append(
                (number, f"criterion {number} FAIL: {title} (took {elapsed:.1f}s, limit {limit_s}s)")
            )
            raise AssertionError(f"criterion {number} took {elapsed:.1f}s, limit {limit_s}s")
        line = f"criterion {number} PASS: {title} ({elapsed:.1f}s, limit {limit_s}s)"
        _ACCEPTANCE_LINES.append((number, line))
        print(line)

    return criterion


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(_ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
