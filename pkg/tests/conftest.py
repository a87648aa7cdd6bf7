from __future__ import annotations

from collections import defaultdict

import pytest

_outcomes: dict = defaultdict(list)
_titles: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion this test belongs to")


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m:
            _titles[m.args[0]] = m.args[1]
            item.user_properties.append(("criterion", m.args[0]))


@pytest.hookimpl(tryfirst=True)
def pytest_runtest_logreport(report):
    number = dict(report.user_properties).get("criterion")
    if number is None:
        return
    if report.when == "call" or report.outcome != "passed":
        _outcomes[number].append(report.outcome == "passed")


def pytest_terminal_summary(terminalreporter):
    if not _titles:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_titles):
        results = _outcomes.get(n, [])
        ok = bool(results) and all(results)
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {_titles[n]} ({len(results)} checks)")
