import re

CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)")


def pytest_terminal_summary(terminalreporter):
    rows = []
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, []):
            if getattr(report, "when", "call") != "call" and outcome != "error":
                continue
            match = CRITERION.search(report.nodeid)
            if match:
                label = "PASS" if outcome == "passed" else "FAIL"
                rows.append((int(match.group(1)), match.group(2).replace("_", " "), label))
    if rows:
        terminalreporter.section("acceptance criteria")
        for number, name, label in sorted(rows):
            terminalreporter.write_line(f"criterion {number}: {label}  {name}")
