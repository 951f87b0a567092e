"""Exact rational time arithmetic.

Every duration and time instant in this package is a ``fractions.Fraction``
measured in seconds.  Fleet-size formulas hinge on exact ceilings of rational
ratios, so no floating point is allowed anywhere in decision logic.  External
formats (scenario JSON, schedule CSV) carry milliseconds; the helpers here
convert exactly in both directions.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rational = Fraction

MS_PER_SECOND = 1000
SECONDS_PER_MINUTE = 60


def rat(numerator: int, denominator: int = 1) -> Fraction:
    return Fraction(numerator, denominator)


def seconds(value) -> Fraction:
    """Exact seconds from an int, string, or Fraction."""
    return Fraction(value)


def minutes(value) -> Fraction:
    """Exact seconds for a duration given in minutes."""
    return Fraction(value) * SECONDS_PER_MINUTE


def from_ms(ms: int) -> Fraction:
    """Seconds from integer milliseconds."""
    return Fraction(ms, MS_PER_SECOND)


def to_ms(t: Fraction) -> Fraction:
    """Milliseconds (possibly non-integral) from seconds."""
    return t * MS_PER_SECOND


def to_ms_int(t: Fraction) -> int:
    """Integer milliseconds; raises if the value is not millisecond-integral."""
    ms = to_ms(t)
    if ms.denominator != 1:
        raise ValueError(f"{t} s is not an integer number of milliseconds")
    return ms.numerator


def ceil_div(a: Fraction, b: Fraction) -> int:
    """Smallest integer k with k*b >= a, for b > 0 (exact ceiling of a/b)."""
    if b <= 0:
        raise ValueError("ceil_div requires a positive divisor")
    return math.ceil(Fraction(a) / b)


def floor_div(a: Fraction, b: Fraction) -> int:
    """Largest integer k with k*b <= a, for b > 0 (exact floor of a/b)."""
    if b <= 0:
        raise ValueError("floor_div requires a positive divisor")
    return math.floor(Fraction(a) / b)


def format_ms(t: Fraction) -> str:
    """Render seconds as exact milliseconds: an integer when representable,
    otherwise the fraction string "p/q"."""
    ms = to_ms(t)
    if ms.denominator == 1:
        return str(ms.numerator)
    return f"{ms.numerator}/{ms.denominator}"


def parse_ms(text: str) -> Fraction:
    """Inverse of :func:`format_ms`: milliseconds text to exact seconds."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        ms = Fraction(int(num), int(den))
    else:
        ms = Fraction(int(text))
    return ms / MS_PER_SECOND


def format_fraction(x: Fraction) -> str:
    """Canonical "p/q" (or plain integer) rendering of an exact rational."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(text: str) -> Fraction:
    return Fraction(text.strip())


def format_decimal(x: Fraction, places: int = 6, trim: bool = False) -> str:
    """Fixed-point decimal rendering of an exact rational.

    Rounding is round-half-even on the exact value, so the output is
    platform-independent.  Columns rendered this way are approximations and
    must never feed back into decision logic.
    """
    scale = 10**places
    scaled = round(x * scale)
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    whole, frac = divmod(scaled, scale)
    text = f"{sign}{whole}.{frac:0{places}d}"
    if trim:
        text = text.rstrip("0").rstrip(".")
        if text in ("", "-"):
            text = "0"
    return text
