import random

import pytest

from copz import ZeroProblem, make_family, sample_params


@pytest.fixture
def rng():
    return random.Random(20240811)


def draw_spec(kind, rng):
    return make_family(kind, sample_params(kind, rng))


def draw_problem(kind, rng, n=None):
    spec = draw_spec(kind, rng)
    if n is None:
        n = rng.randint(1, min(5, spec.degree_max))
    return ZeroProblem(spec, min(n, spec.degree_max))
