"""Shared fixtures.

The Leech minimal layer is expensive to build, so it is computed once per
session and its build time is recorded; the acceptance suite charges that
time against its own budget.
"""
import time

import pytest

from modlattice.enumeration import min_layer
from modlattice.lattice import load_catalog

# wall-clock costs of session fixtures, keyed by fixture name
TIMINGS = {}

# (number, ok, text) per acceptance criterion, echoed after the test lines;
# printed via the terminal reporter so output capture cannot swallow them
VERDICTS = []


def pytest_terminal_summary(terminalreporter):
    if not VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for num, ok, text in sorted(VERDICTS):
        terminalreporter.write_line(
            "[%s] criterion %d: %s" % ("PASS" if ok else "FAIL", num, text))


@pytest.fixture(scope="session")
def catalog():
    return load_catalog()


@pytest.fixture(scope="session")
def leech_layer(catalog):
    t0 = time.time()
    layer = min_layer(catalog.lattice("Leech"), threads=1)
    TIMINGS["leech_layer"] = time.time() - t0
    return layer
