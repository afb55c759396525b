"""Per-criterion PASS/FAIL summary for the acceptance module."""
from collections import OrderedDict

import pytest

_RESULTS: "OrderedDict[str, list]" = OrderedDict()
_TITLES: dict = {}
_METRICS: "OrderedDict[str, object]" = OrderedDict()


@pytest.fixture
def record_metric():
    """Store a measured value; all of them are listed after the criteria."""

    def record(name, value):
        _METRICS[name] = value

    return record


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(cid, title): acceptance criterion the test witnesses")


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            cid, title = m.args
            _TITLES[cid] = title
            _RESULTS.setdefault(cid, [])


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _RESULTS[m.args[0]].append((item.name, rep.passed))


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for cid in sorted(_RESULTS, key=lambda c: int(c[1:])):
        runs = _RESULTS[cid]
        if not runs:
            status = "NOT RUN"
        else:
            status = "PASS" if all(ok for _, ok in runs) else "FAIL"
        failed = [name for name, ok in runs if not ok]
        extra = f"  (failed: {', '.join(failed)})" if failed else ""
        tr.write_line(f"{cid} {status}: {_TITLES[cid]}{extra}")
    if _METRICS:
        tr.section("recorded measurements")
        for name, value in _METRICS.items():
            tr.write_line(f"{name}={value}")
