"""Shared test configuration: acceptance criteria summary lines."""


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Print one PASS/FAIL line per acceptance criterion test."""
    verdicts: dict[int, str] = {}
    for status, verdict in (
        ("passed", "PASS"),
        ("failed", "FAIL"),
        ("error", "FAIL"),
        ("skipped", "FAIL"),
    ):
        for report in terminalreporter.stats.get(status, []):
            nodeid = getattr(report, "nodeid", "")
            marker = "test_acceptance.py::test_criterion_"
            if marker not in nodeid:
                continue
            tail = nodeid.split(marker, 1)[1]
            digits = ""
            for ch in tail:
                if ch.isdigit():
                    digits += ch
                else:
                    break
            if not digits:
                continue
            num = int(digits)
            if verdicts.get(num) != "FAIL":
                verdicts[num] = verdict
    if verdicts:
        terminalreporter.write_sep("-", "acceptance criteria")
        for num in sorted(verdicts):
            terminalreporter.write_line(f"ACCEPTANCE {num}: {verdicts[num]}")
