import re

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)")


def pytest_terminal_summary(terminalreporter):
    rows = {}
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, []):
            if getattr(report, "when", "call") not in ("call", "setup"):
                continue
            m = _CRITERION.search(report.nodeid)
            if m:
                num = int(m.group(1))
                if outcome != "passed" or num not in rows:
                    rows[num] = ("PASS" if outcome == "passed" else "FAIL", m.group(2))
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(rows):
        status, name = rows[num]
        terminalreporter.write_line(f"criterion {num}: {status} ({name.replace('_', ' ')})")
