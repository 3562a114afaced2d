import random
from fractions import Fraction

import pytest


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


def random_fraction(rng: random.Random, span: int = 9) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.choice((1, 1, 1, 2, 3)))


def random_table(rng: random.Random, n: int, first=None) -> list[Fraction]:
    table = [random_fraction(rng) for _ in range(1 << n)]
    if first is not None:
        table[0] = Fraction(first)
    return table
