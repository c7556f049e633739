import math
import sys

import numpy as np
import pytest
from hypothesis import settings

from radialgeo.metric import custom_factor

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

# (1+t) exp(-t/2): positive, non-monotone, with a closed-form triple
MIXED = custom_factor(
    lambda t: (1.0 + t) * math.exp(-0.5 * t),
    lambda t: (0.5 - 0.5 * t) * math.exp(-0.5 * t),
    lambda t: (0.25 * t - 0.75) * math.exp(-0.5 * t),
    "mixed")
LINEAR = custom_factor(lambda t: 1.0 + t, lambda t: 1.0, lambda t: 0.0, "linear")


@pytest.fixture
def rng():
    return np.random.default_rng(7)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
