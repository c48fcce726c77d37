import random

import pytest

from level3ec.rational3 import Rational3
from level3ec.eisenstein import EisElem
from level3ec.bring import BElem


def rand_r3(rng, m=9):
    return Rational3(rng.randint(-m, m), rng.randint(0, 2))


def rand_eis(rng, m=9):
    return EisElem(rand_r3(rng, m), rand_r3(rng, m))


def rand_belem(rng, deg=4, den=2, m=9):
    coeffs = [rand_eis(rng, m) for _ in range(rng.randint(0, deg) + 1)]
    return BElem(coeffs, rng.randint(0, den))


def rand_belem_nonzero(rng, deg=4, den=2, m=9):
    while True:
        f = rand_belem(rng, deg, den, m)
        if not f.is_zero():
            return f


@pytest.fixture
def rng():
    return random.Random(0x1E7E3)
