import random
from fractions import Fraction

import pytest

from qbps.lattice import Weight
from qbps.quiver import (
    DimensionVector,
    Quiver,
    a2_quiver,
    double,
    jordan_quiver,
    loop_quiver,
    triple,
)


@pytest.fixture
def jordan():
    return jordan_quiver()


@pytest.fixture
def three_loop():
    return triple(jordan_quiver())


@pytest.fixture
def tripled_a2():
    return triple(a2_quiver())


@pytest.fixture
def doubled_g2():
    return double(loop_quiver(2))


@pytest.fixture
def rng():
    return random.Random(20240817)


def dim(q: Quiver, mapping) -> DimensionVector:
    return DimensionVector.make(q, mapping)


def rational_weight(rng: random.Random, d: DimensionVector, bound: int = 4,
                    den: int = 8) -> Weight:
    return Weight(d, tuple(Fraction(rng.randint(-bound * den, bound * den), den)
                           for _ in range(d.total)))


def sum_zero_weight(rng: random.Random, d: DimensionVector, bound: int = 4,
                    den: int = 8) -> Weight:
    coords = [Fraction(rng.randint(-bound * den, bound * den), den)
              for _ in range(d.total - 1)]
    coords.append(-sum(coords))
    return Weight(d, tuple(coords))
