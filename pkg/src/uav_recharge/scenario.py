"""Scenario data model, validation, and seeded random generation.

A scenario is the triple (f, c, g): maximum flight time per charge, battery
replace/recharge duration, and one positive displacement time per aerial
location.  Locations are indexed 1..N.  Every g_i must satisfy 2*g_i < f or
the location is unreachable on a single charge.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .rational import ceil_div, floor_div, from_ms, to_ms_int
from .rng import SplitMix64


class ScenarioError(ValueError):
    """Invalid scenario data or scenario file."""


class HomogeneityError(ScenarioError):
    """A homogeneous-only operation was applied to a heterogeneous scenario."""


@dataclass(frozen=True)
class Scenario:
    """Immutable problem instance: flight budget, recharge time, displacements."""

    f: Fraction
    c: Fraction
    g: tuple[Fraction, ...]

    @property
    def n(self) -> int:
        return len(self.g)

    @property
    def is_homogeneous(self) -> bool:
        return all(gi == self.g[0] for gi in self.g)

    def displacement(self, location: int) -> Fraction:
        """Displacement time of a 1-based location index."""
        if not 1 <= location <= self.n:
            raise ScenarioError(f"location index {location} out of range 1..{self.n}")
        return self.g[location - 1]

    def subset(self, locations) -> "Scenario":
        """Sub-scenario restricted to the given 1-based location indices.

        The returned scenario re-indexes the chosen locations 1..I in the
        given order; use :attr:`g` to recover displacements.
        """
        return Scenario(self.f, self.c, tuple(self.displacement(i) for i in locations))


def scenario(f, c, g) -> Scenario:
    """Build and validate a scenario from rational-convertible values (seconds)."""
    return validate_scenario(
        Scenario(Fraction(f), Fraction(c), tuple(Fraction(gi) for gi in g))
    )


def validate_scenario(s: Scenario) -> Scenario:
    """Return ``s`` unchanged if all invariants hold, else raise ScenarioError.

    Each failure mode reports the offending quantity (and location index).
    """
    if s.n < 1:
        raise ScenarioError("scenario needs at least one location")
    if s.f <= 0:
        raise ScenarioError(f"flight time f must be positive, got {s.f}")
    if s.c < 0:
        raise ScenarioError(f"recharge time c must be nonnegative, got {s.c}")
    for i, gi in enumerate(s.g, start=1):
        if gi <= 0:
            raise ScenarioError(f"displacement g_i must be positive at i={i}, got {gi}")
    for i, gi in enumerate(s.g, start=1):
        if 2 * gi >= s.f:
            raise ScenarioError(f"2g_i < f violated at i={i} (g={gi}, f={s.f})")
    return s


@dataclass(frozen=True)
class ScenarioDistribution:
    """Uniform displacement model: g_i ~ U(g_bar*(1-delta), g_bar*(1+delta)).

    ``delta`` is the displacement deviation in [0, 1); delta = 0 draws a
    homogeneous scenario.  The same seed always reproduces the same scenario.
    """

    n_locations: int
    g_bar: Fraction
    delta: Fraction
    seed: int

    def __post_init__(self):
        if self.n_locations < 1:
            raise ScenarioError("n_locations must be >= 1")
        if not 0 <= self.delta < 1:
            raise ScenarioError(f"delta must lie in [0, 1), got {self.delta}")
        if self.g_bar * (1 - self.delta) <= 0:
            raise ScenarioError("distribution support must be strictly positive")


def draw_scenario(d: ScenarioDistribution, f, c) -> Scenario:
    """Draw a scenario with n_locations displacements quantized to 1 ms.

    Quantization keeps every draw an exact rational and bit-reproducible:
    the uniform draw is over the integer milliseconds inside the support, so
    the support bounds are never escaped and delta = 0 yields identical g_i.
    """
    f = Fraction(f)
    c = Fraction(c)
    hi_support = d.g_bar * (1 + d.delta)
    if 2 * hi_support >= f:
        raise ScenarioError(
            f"distribution support allows 2g_i >= f (g up to {hi_support}, f={f})"
        )
    lo_ms = ceil_div(d.g_bar * (1 - d.delta) * 1000, Fraction(1))
    hi_ms = floor_div(hi_support * 1000, Fraction(1))
    if lo_ms > hi_ms:
        raise ScenarioError("distribution support contains no millisecond grid point")
    lo_ms = max(lo_ms, 1)
    rng = SplitMix64(d.seed)
    g = tuple(from_ms(rng.uniform_int(lo_ms, hi_ms)) for _ in range(d.n_locations))
    return validate_scenario(Scenario(f, c, g))


@dataclass(frozen=True)
class Overhead:
    """Relative round-trip overhead per location: 2*g_i/f, each in (0, 1)."""

    per_location: tuple[Fraction, ...]
    average: Fraction


def overhead_of(s: Scenario) -> Overhead:
    validate_scenario(s)
    per = tuple(2 * gi / s.f for gi in s.g)
    return Overhead(per_location=per, average=sum(per, Fraction(0)) / len(per))


# --- scenario files -------------------------------------------------------
#
# JSON object {"f_ms": int, "c_ms": int, "g_ms": [int, ...]}, all durations
# in integer milliseconds.

def scenario_to_dict(s: Scenario) -> dict:
    return {
        "f_ms": to_ms_int(s.f),
        "c_ms": to_ms_int(s.c),
        "g_ms": [to_ms_int(gi) for gi in s.g],
    }


def scenario_from_dict(data: dict) -> Scenario:
    for field in ("f_ms", "c_ms", "g_ms"):
        if field not in data:
            raise ScenarioError(f"scenario file missing field '{field}'")
    f_ms, c_ms, g_ms = data["f_ms"], data["c_ms"], data["g_ms"]
    if not isinstance(f_ms, int) or not isinstance(c_ms, int):
        raise ScenarioError("f_ms and c_ms must be integers (milliseconds)")
    if not isinstance(g_ms, list) or not all(isinstance(v, int) for v in g_ms):
        raise ScenarioError("g_ms must be a list of integers (milliseconds)")
    return validate_scenario(
        Scenario(from_ms(f_ms), from_ms(c_ms), tuple(from_ms(v) for v in g_ms))
    )


def save_scenario(s: Scenario, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(scenario_to_dict(s), fh, indent=2)
        fh.write("\n")


def load_scenario(path) -> Scenario:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"scenario file is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ScenarioError("scenario file must contain a JSON object")
    return scenario_from_dict(data)
