import math

import pytest

SQRT8 = math.sqrt(8.0)


@pytest.fixture(scope="session")
def mp():
    mpmath = pytest.importorskip("mpmath")
    mpmath.mp.dps = 40
    return mpmath
