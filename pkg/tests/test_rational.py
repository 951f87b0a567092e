from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from uav_recharge.rational import (
    ceil_div,
    floor_div,
    format_decimal,
    format_fraction,
    format_ms,
    from_ms,
    minutes,
    parse_ms,
    to_ms_int,
)

fractions_small = st.fractions(
    min_value=Fraction(1, 1000), max_value=1000, max_denominator=1000
)
fractions_any = st.fractions(min_value=-1000, max_value=1000, max_denominator=1000)


@given(a=fractions_any, b=fractions_any)
def test_addition_round_trips(a, b):
    assert (a + b) - b == a


@given(a=fractions_any, b=fractions_any.filter(lambda x: x != 0))
def test_multiplication_round_trips(a, b):
    assert (a * b) / b == a


@given(a=fractions_small, b=fractions_small)
def test_ceil_div_matches_integer_oracle(a, b):
    # Independent derivation: k*b >= a with a=p/q, b=r/s means k >= p*s/(r*q),
    # so the smallest k is the pure-integer ceiling of p*s over r*q.
    p, q = a.numerator, a.denominator
    r, s = b.numerator, b.denominator
    expected = -(-(p * s) // (r * q))
    k = ceil_div(a, b)
    assert k == expected
    assert k * b >= a
    assert (k - 1) * b < a


def test_ceil_div_exhaustive_small_grid():
    # Brute force the defining property over a dense small grid.
    values = [Fraction(n, d) for n in range(1, 13) for d in range(1, 13)]
    for a in values[::7]:
        for b in values[::5]:
            k = 0
            while k * b < a:
                k += 1
            assert ceil_div(a, b) == k


def test_ceil_div_exact_integer_ratio_does_not_over_round():
    assert ceil_div(Fraction(40), Fraction(40)) == 1
    assert ceil_div(Fraction(10) * 4, Fraction(40)) == 1


def test_floor_div():
    assert floor_div(Fraction(7, 2), Fraction(1)) == 3
    assert floor_div(Fraction(3), Fraction(3)) == 1
    with pytest.raises(ValueError):
        floor_div(Fraction(1), Fraction(0))


def test_ceil_div_rejects_nonpositive_divisor():
    with pytest.raises(ValueError):
        ceil_div(Fraction(1), Fraction(-1))


def test_ms_formatting_round_trip():
    assert format_ms(Fraction(7, 10)) == "700"
    assert parse_ms("700") == Fraction(7, 10)
    x = minutes(45) / 3 - minutes(5) * 2 / 3  # awkward rational
    assert parse_ms(format_ms(x)) == x


@given(st.fractions(min_value=-10**6, max_value=10**6, max_denominator=997))
def test_ms_round_trip_property(x):
    assert parse_ms(format_ms(x)) == x


def test_to_ms_int():
    assert to_ms_int(from_ms(123456)) == 123456
    with pytest.raises(ValueError):
        to_ms_int(Fraction(1, 3))


def test_format_fraction():
    assert format_fraction(Fraction(3)) == "3"
    assert format_fraction(Fraction(35, 3)) == "35/3"


def test_format_decimal():
    assert format_decimal(Fraction(1, 3)) == "0.333333"
    assert format_decimal(Fraction(11, 10)) == "1.100000"
    assert format_decimal(Fraction(3, 10), trim=True) == "0.3"
    assert format_decimal(Fraction(0), trim=True) == "0"
    assert format_decimal(Fraction(-1, 4)) == "-0.250000"
