"""Collects per-criterion verdicts from tests marked ``@pytest.mark.criterion(n, title)``
and prints one ACCEPTANCE line per criterion at the end of the run."""

import pytest

_verdicts = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by a test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    entry = _verdicts.setdefault(number, {"title": title, "passed": True, "failed": []})
    if report.failed or (report.when == "call" and report.skipped):
        entry["passed"] = False
        entry["failed"].append(item.name)


def pytest_terminal_summary(terminalreporter):
    if not _verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_verdicts):
        entry = _verdicts[number]
        verdict = "PASS" if entry["passed"] else "FAIL"
        line = f"ACCEPTANCE C{number} {entry['title']}: {verdict}"
        if entry["failed"]:
            line += f"  (failing: {', '.join(sorted(set(entry['failed'])))})"
        terminalreporter.write_line(line)
