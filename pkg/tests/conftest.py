import time
from fractions import Fraction

import pytest

from tschakaloff import ProblemInstance, compute_record

_TIMINGS: dict[str, float] = {}


@pytest.fixture(scope="session")
def inst21() -> ProblemInstance:
    """The workhorse instance q=2, z=1."""
    return ProblemInstance.from_rationals(Fraction(2), Fraction(1))


@pytest.fixture(scope="session")
def records21(inst21):
    """Certified records for q=2, z=1 up to n=60, shared across the suite."""
    start = time.perf_counter()
    records = [compute_record(inst21, n) for n in range(1, 61)]
    _TIMINGS["records21"] = time.perf_counter() - start
    return records


@pytest.fixture(scope="session")
def records21_elapsed(records21) -> float:
    """Wall time spent building the shared record table."""
    return _TIMINGS["records21"]
