"""Collects acceptance outcomes and prints one line per criterion at the end."""

import pytest

CRITERIA = {
    1: "worked statistic values",
    2: "reference table of 30 words",
    3: "distribution polynomials and negative control",
    4: "phi / psi golden fixtures",
    5: "den insertion golden trace",
    6: "maj insertion golden output",
    7: "(gdes_l, gmaj_l) ~ (gexc_l, gden_h) sweep",
    8: "uniform multiset sweep against (rdes, rmaj)",
    9: "Mahonian identity sweep",
    10: "bijection suites",
    11: "q-series identities",
}

_outcomes: dict[int, list[bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _outcomes.setdefault(marker.args[0], []).append(rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n, title in CRITERIA.items():
        results = _outcomes.get(n)
        if results is None:
            status = "NOT RUN"
        else:
            status = "PASS" if all(results) else "FAIL"
        terminalreporter.write_line(f"criterion {n:2d}  {status:7s} {title}")
