import numpy as np
import pytest

from qsmatch import MatcherSpec, QuadraticRationalMap, build_matcher
from qsmatch.errors import DegenerateError
from qsmatch.moebius import Moebius


@pytest.fixture
def rng():
    return np.random.default_rng(20170915)


def random_complex(rng, size=None, scale=1.0):
    return scale * (rng.normal(size=size) + 1j * rng.normal(size=size))


def random_map(rng):
    while True:
        try:
            return QuadraticRationalMap(*random_complex(rng, 6))
        except DegenerateError:
            continue


def random_moebius(rng):
    while True:
        a, b, c, d = random_complex(rng, 4)
        if abs(a * d - b * c) > 0.1:
            return Moebius(a, b, c, d)


def random_spec(rng):
    z1 = complex(random_complex(rng))
    return MatcherSpec(z1, rng.uniform(0.55, 0.98))


@pytest.fixture
def ex_matcher():
    """Matcher for reference (|0> + i|1>)/sqrt(2) and squared overlap 0.9."""
    return build_matcher(MatcherSpec.from_overlap_sq(1j, 0.9))
