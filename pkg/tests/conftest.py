import contextlib

import pytest

_ACCEPTANCE_LINES = []


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line per acceptance criterion."""

    @contextlib.contextmanager
    def check(label, detail=""):
        info = {"detail": detail}
        try:
            yield info
        except BaseException:
            _ACCEPTANCE_LINES.append(f"FAIL  {label}  {info['detail']}")
            raise
        _ACCEPTANCE_LINES.append(f"PASS  {label}  {info['detail']}")

    return check


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
