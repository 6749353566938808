"""Shared fixtures.  SEED fixes every randomized suite; change it and the
whole run changes together, reproducibly."""

import random
from fractions import Fraction

import pytest

from magmaexp import UNIT, TreeSeries, enumerate_trees

SEED = 20250821


@pytest.fixture
def rng():
    return random.Random(SEED)


def random_series(rng, truncation, density=0.5, magnitude=9):
    """Sparse series with small random rational coefficients."""
    terms = {}
    for n in range(truncation + 1):
        for t in [UNIT] if n == 0 else enumerate_trees(n):
            if rng.random() < density:
                num = rng.randint(-magnitude, magnitude)
                if num:
                    terms[t] = Fraction(num, rng.randint(1, magnitude))
    return TreeSeries(truncation, terms)


@pytest.fixture
def make_series(rng):
    def build(truncation, density=0.5, magnitude=9):
        return random_series(rng, truncation, density, magnitude)

    return build
