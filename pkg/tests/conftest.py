import sys

import numpy as np
import pytest

from elliptica.solutions import Family, FieldConfig

K_I = 1.3110287771460599  # K(m=-1), from quadrature in test_elliptic_core


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def massive():
    return FieldConfig(Family.MASSIVE, mu0=1.0, mu=1.0, lam=2.0)


@pytest.fixture
def massless():
    return FieldConfig(Family.MASSLESS, mu0=0.0, mu=1.0, lam=2.0)


@pytest.fixture
def ssb():
    return FieldConfig(Family.SSB, mu0=np.sqrt(3.0), lam=2.0)


@pytest.fixture(params=["massive", "massless", "ssb"])
def any_config(request):
    return request.getfixturevalue(request.param)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.REPORT:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.REPORT:
        terminalreporter.write_line(line)
