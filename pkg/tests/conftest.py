import os
import sys
import warnings

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from zdecomp import fixture_path  # noqa: E402
from zdecomp.docformat import read_document  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


def load_algebra(name):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return read_document(fixture_path(name)).algebra()


@pytest.fixture(scope="session")
def ex65():
    return load_algebra("example_6_5.alg")


@pytest.fixture(scope="session")
def ex69():
    return load_algebra("example_6_9.alg")


@pytest.fixture(scope="session")
def ex610():
    return load_algebra("example_6_10.alg")


@pytest.fixture(scope="session")
def ex611():
    return load_algebra("example_6_11.alg")


def pytest_runtest_logreport(report):
    # a criterion that raised before recording its line still gets a FAIL line
    name = report.nodeid.rsplit("::", 1)[-1]
    if report.when != "call" or not report.failed or not name.startswith("test_criterion_"):
        return
    number = name.split("_")[2]
    if not any(f"criterion {number}:" in line for line in ACCEPTANCE_LINES):
        ACCEPTANCE_LINES.append(f"[FAIL] criterion {number}: {name} raised before completing")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
