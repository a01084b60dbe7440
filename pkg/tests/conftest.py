"""Shared session fixtures: algebra contexts are expensive to warm up (memoized
coproducts, basis-change matrices, braiding tables), so every test file works
against one shared instance of each."""

import pytest

from qskein.axiom_suite import run_all
from qskein.bq_sl2 import BqContext
from qskein.oq_sl2 import OqContext
from qskein.tensor_power import PowerContext


@pytest.fixture(scope="session")
def oq():
    return OqContext()


@pytest.fixture(scope="session")
def bq(oq):
    return BqContext(oq)


@pytest.fixture(scope="session")
def power(bq):
    return PowerContext(bq)


@pytest.fixture(scope="session")
def suite_report(bq):
    """Full verification suite at the acceptance sample size, run once."""
    import time

    t0 = time.time()
    report = run_all(degree=2, trials=50, seed=42, bq=bq)
    return report, time.time() - t0


@pytest.fixture(scope="session")
def suite_small_pair(bq):
    """Two identical small runs; used for the determinism contract."""
    a = run_all(degree=1, trials=3, seed=7, bq=bq)
    b = run_all(degree=1, trials=3, seed=7, bq=bq)
    return a, b
