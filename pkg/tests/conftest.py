from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from acceptance_registry import RESULTS  # noqa: E402


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        description, passed = RESULTS[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if passed else 'FAIL'}  {description}")
