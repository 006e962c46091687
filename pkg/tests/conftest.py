import numpy as np
import pytest
from hypothesis import settings

from relspin.minkowski import MomentumContext

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def ref_ctx():
    # p0 = 5/4, |xi| = ln 2
    return MomentumContext(1.0, np.array([0.0, 0.0, 0.75]))


@pytest.fixture
def rest_ctx():
    return MomentumContext(1.0, np.zeros(3))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.LINES:
        terminalreporter.section("acceptance criteria")
        for line in mod.LINES:
            terminalreporter.write_line(line)
