"""Shared pytest hooks.

The acceptance module records one (number, description, ok) row per
criterion; the terminal-summary hook below prints them as single
pass/fail lines so the outcome of a full run is readable at a glance.
"""

import sys


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    mod = sys.modules.get("test_acceptance") or sys.modules.get(
        "tests.test_acceptance"
    )
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(results):
        desc, ok = results[num]
        word = "PASS" if ok else "FAIL"
        tr.write_line(f"ACCEPTANCE {num:2d} {word} - {desc}")
