import random

import pytest

from ktoeplitz import IntegerRing, KToeplitzSpec, ZMod

# lines recorded by the acceptance suite, echoed in the terminal summary
CRITERIA_LINES: list = []


def worked_spec(n: int = 19) -> KToeplitzSpec:
    """The 19 x 19 period-3 example over Z/60."""
    return KToeplitzSpec.from_values(ZMod(60), n, [1, 2, 3], [1, -1, 1], [12, 7, 1])


def sample(ring, rng: random.Random, lo: int = -9, hi: int = 9):
    if isinstance(ring, ZMod):
        return rng.randrange(ring.modulus)
    return ring.coerce(rng.randint(lo, hi))


def random_spec(ring, n: int, k: int, rng: random.Random, lo: int = -9, hi: int = 9) -> KToeplitzSpec:
    a, b, c = ([sample(ring, rng, lo, hi) for _ in range(k)] for _ in range(3))
    return KToeplitzSpec(ring, n, k, tuple(a), tuple(b), tuple(c))


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture
def zz():
    return IntegerRing()


@pytest.fixture
def z60():
    return ZMod(60)


@pytest.fixture
def example():
    return worked_spec()


def pytest_terminal_summary(terminalreporter):
    if CRITERIA_LINES:
        terminalreporter.section("acceptance criteria")
        for line in CRITERIA_LINES:
            terminalreporter.write_line(line)
