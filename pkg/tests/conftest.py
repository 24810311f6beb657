import math

import numpy as np
import pytest

TWO_PI = 2.0 * math.pi


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(label): exit criterion, reported in the summary")


_ACCEPTANCE = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    label = marker.args[0]
    if report.when == "call" or (report.when == "setup" and report.failed):
        _ACCEPTANCE[label] = ("PASS" if report.passed else "FAIL", report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_ACCEPTANCE, key=lambda s: int(s.split()[0][1:])):
        status, duration = _ACCEPTANCE[label]
        terminalreporter.write_line(f"{status}  {label}  ({duration:.2f} s)")
