import re

import pytest

import instances

_acceptance = {}


@pytest.fixture
def s3p1():
    return instances.sigma3_p1()


@pytest.fixture
def s2p1():
    return instances.sigma2_p1()


@pytest.fixture
def s2p2w():
    return instances.sigma2_p2_weighted()


@pytest.fixture
def s3p2():
    return instances.sigma3_p2()


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_c(\d+)_(\w+)", report.nodeid)
    if not m:
        return
    key = (int(m.group(1)), m.group(2).replace("_", " "))
    if report.when == "call" or report.failed:
        if _acceptance.get(key) != "FAIL":
            _acceptance[key] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for (n, name), outcome in sorted(_acceptance.items()):
        terminalreporter.write_line("%s  criterion %2d: %s" % (outcome, n, name))
