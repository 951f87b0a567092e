from fractions import Fraction

import pytest

from uav_recharge import scenario
from uav_recharge.rational import minutes, seconds


@pytest.fixture
def fig2():
    """Three locations, f=45 min, g=5 min, c=15 s."""
    return scenario(minutes(45), seconds(15), [minutes(5)] * 3)


@pytest.fixture
def sec6():
    """Five locations at 5,6,9,10,15 min, f=45 min, c=15 s."""
    return scenario(minutes(45), seconds(15), [minutes(g) for g in (5, 6, 9, 10, 15)])


@pytest.fixture
def fig4():
    """Three locations at 1,5,9 min, f=45 min, c=15 s."""
    return scenario(minutes(45), seconds(15), [minutes(g) for g in (1, 5, 9)])


@pytest.fixture
def half() -> Fraction:
    return Fraction(1, 2)
