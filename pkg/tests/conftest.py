from collections import defaultdict

_criteria = {}
_outcomes = defaultdict(lambda: {"passed": 0, "failed": 0, "skipped": 0})
_owner = {}


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            number, title = mark.args
            _criteria[number] = title
            _owner[item.nodeid] = number


def pytest_runtest_logreport(report):
    number = _owner.get(report.nodeid)
    if number is None:
        return
    if report.failed:
        _outcomes[number]["failed"] += 1
    elif report.skipped:
        _outcomes[number]["skipped"] += 1
    elif report.when == "call":
        _outcomes[number]["passed"] += 1


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria, key=str):
        tally = _outcomes[number]
        ran = tally["passed"] + tally["failed"]
        if tally["failed"]:
            verdict = "FAIL"
        elif ran:
            verdict = "PASS"
        else:
            verdict = "NOT RUN"
        terminalreporter.write_line(
            f"criterion {number} ({_criteria[number]}): {verdict}"
            f"  [{tally['passed']} passed, {tally['failed']} failed, {tally['skipped']} skipped]"
        )
