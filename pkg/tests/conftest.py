from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "suite",
    max_examples=40,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
    deadline=None,
)
settings.load_profile("suite")


def grid_fraction(rng, lo=1, hi=64, den=8) -> Fraction:
    return Fraction(rng.randint(lo, hi), den)


def random_spec_cls():
    from quadareas import DivisionSpec

    return DivisionSpec


@pytest.fixture
def unit_spec():
    from quadareas import DivisionSpec

    return DivisionSpec.of((1, 1, 1), (1, 1, 1))


@pytest.fixture
def skew_spec():
    """A planar spec whose ratio tuples are not proportional."""
    from quadareas import DivisionSpec

    return DivisionSpec.of((1, 1, 1), (1, 2, 6))


@pytest.fixture
def spatial_spec():
    from quadareas import DivisionSpec

    return DivisionSpec.of((1, 2, 3), (1, 1, 1))
