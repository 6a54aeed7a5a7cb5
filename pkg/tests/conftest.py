import os
import tempfile

# Settings are read at import time; keep test logs out of the working tree
os.environ.setdefault("LOG_DIR", tempfile.mkdtemp(prefix="diophantine-logs-"))

import pytest

from app.models.equation import EquationInstance, SearchBounds
from app.models.mersenne import MersennePrime

# Exponents p with 2^p - 1 prime used across the suites
SMALL_EXPONENTS = [2, 3, 5, 7, 13]
ODD_PRIMES_TO_50 = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]


@pytest.fixture
def mersenne():
    """Build a MersennePrime from its value, e.g. mersenne(8191)."""
    return MersennePrime.from_value


@pytest.fixture
def instance():
    """Build an EquationInstance from Mersenne values and l, e.g. instance(8191, 7, 3)."""
    def _build(mp_value: int, mq_value: int, l: int) -> EquationInstance:
        return EquationInstance(
            mp=MersennePrime.from_value(mp_value),
            mq=MersennePrime.from_value(mq_value),
            l=l,
        )
    return _build


@pytest.fixture
def default_bounds():
    return SearchBounds(x_max=12, y_max=12)
