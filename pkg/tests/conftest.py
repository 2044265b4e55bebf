from __future__ import annotations

import math
import random

import pytest

from qchull.gf import field_make, parse_field
from qchull.poly import RingElement

SMALL_FIELDS = ("2", "3", "4", "5")


def coprime_ms(q: int, upto: int = 12) -> list[int]:
    return [m for m in range(1, upto + 1) if math.gcd(m, q) == 1]


def random_ring(rng: random.Random, field, m: int) -> RingElement:
    return RingElement.from_ints(field, m, [rng.randrange(field.q) for _ in range(m)])


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


@pytest.fixture(params=SMALL_FIELDS)
def small_field(request):
    return parse_field(request.param)


@pytest.fixture
def gf2():
    return field_make(2)


@pytest.fixture
def gf3():
    return field_make(3)


@pytest.fixture
def gf4():
    return field_make(2, 2)


@pytest.fixture
def gf5():
    return field_make(5)
