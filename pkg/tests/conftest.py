"""Shared pytest hooks: the acceptance verdict summary.

Each acceptance criterion is one test in test_acceptance.py named
test_criterion_NN_label. Their call-phase outcomes are collected here
and echoed as one fixed-format line per criterion at the end of the
run, so the verdicts survive output capture.
"""

import re

_ACCEPTANCE_PATTERN = re.compile(
    r"test_acceptance\.py::test_criterion_(\d+)_([a-z0-9_]+)")
_acceptance_outcomes = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    match = _ACCEPTANCE_PATTERN.search(report.nodeid)
    if match:
        number = int(match.group(1))
        label = match.group(2).replace("_", " ")
        _acceptance_outcomes[number] = (label, report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_outcomes:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for number in sorted(_acceptance_outcomes):
        label, outcome = _acceptance_outcomes[number]
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(
            f"ACCEPTANCE {number:02d} {label}: {verdict}")
