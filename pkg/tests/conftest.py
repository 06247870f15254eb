import os
import sys

# make the oracle module importable as a plain module
sys.path.insert(0, os.path.dirname(__file__))

import pytest

# criterion number -> (passed, detail), filled by test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def record():
    def _record(number: int, failures: list[str], detail: str) -> None:
        if failures:
            detail += " | failing: " + "; ".join(failures[:4])
        ACCEPTANCE[number] = (not failures, detail)
        assert not failures, "\n".join(failures)
    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        passed, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}")
