import re

CRITERIA = {
    1: "count reproduction, n = 1..10, both algorithms",
    2: "order-4 lists (stamp, semi, open)",
    3: "golden n = 5 listings",
    4: "Gray code certification, n = 2..10",
    5: "oracle equivalence and filtering, n <= 8",
    6: "recursive == iterative, n <= 10",
    7: "operation-count complexity properties",
    8: "structural property suites",
}

_results = {}


def pytest_runtest_logreport(report):
    match = re.search(r"test_acceptance\.py::test_criterion_(\d+)_", report.nodeid)
    if not match:
        return
    number = int(match.group(1))
    if report.when == "call" or report.failed or report.skipped:
        if report.failed:
            _results[number] = "FAIL"
        elif report.skipped:
            _results.setdefault(number, "SKIP")
        else:
            _results.setdefault(number, "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        terminalreporter.write_line(f"criterion {number}: {_results[number]}  {CRITERIA[number]}")
