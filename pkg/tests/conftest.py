"""Shared fixtures and the acceptance-criterion summary."""

import pytest

_CRITERIA: dict[tuple[int, str], list[str]] = {}


def pytest_runtest_logreport(report):
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        marker = getattr(report, "criterion", None)
        if marker is not None:
            _CRITERIA.setdefault(marker, []).append(report.outcome)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is not None:
        rep.criterion = (int(m.args[0]), str(m.args[1]))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for (num, title), outcomes in sorted(_CRITERIA.items()):
        ok = all(o == "passed" for o in outcomes)
        terminalreporter.write_line(
            f"criterion {num}: {'PASS' if ok else 'FAIL'}  {title}  ({len(outcomes)} checks)")
