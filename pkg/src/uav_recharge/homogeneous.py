"""HoRR: optimal rotating recharge scheduling for homogeneous scenarios.

With all displacements equal to g, one serving UAV is relieved every
x = (f - 2g)/N time units, rotating through the locations in index order.
N + ceil((c + 2g)/x) UAVs are necessary and sufficient; each UAV, once in
regime, serves exactly f - 2g per cycle and is sent to recharge every
(N + ceil((2g + c)/x)) * x time units.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .events import Schedule, rotation_schedule
from .rational import ceil_div
from .scenario import HomogeneityError, Scenario, ScenarioError, validate_scenario


@dataclass(frozen=True)
class HorrParameters:
    """Closed-form schedule parameters for a homogeneous scenario."""

    x: Fraction
    n_backups: int
    m_total: int
    period: Fraction


def _homogeneous_g(s: Scenario) -> Fraction:
    validate_scenario(s)
    if not s.is_homogeneous:
        raise HomogeneityError(
            "scenario is heterogeneous; displacements must all be equal"
        )
    return s.g[0]


def horr_parameters(s: Scenario) -> HorrParameters:
    g = _homogeneous_g(s)
    x = (s.f - 2 * g) / s.n
    n_backups = ceil_div(s.c + 2 * g, x)
    return HorrParameters(
        x=x,
        n_backups=n_backups,
        m_total=s.n + n_backups,
        period=(s.n + n_backups) * x,
    )


def horr_fleet_size(s: Scenario) -> int:
    """Minimum fleet: M = N + ceil((c + 2g)/(f - 2g) * N), exactly."""
    return horr_parameters(s).m_total


def horr_recharge_instant(s: Scenario, i: int, k: int) -> Fraction:
    """Instant at which the UAV initially covering location i is sent to
    recharge for the k-th time:  t_i^k = (i + (k-1)N + (k-1)*ceil((2g+c)/x))*x.
    """
    params = horr_parameters(s)
    if not 1 <= i <= s.n:
        raise ScenarioError(f"location index {i} out of range 1..{s.n}")
    if k < 1:
        raise ScenarioError(f"cycle count k must be >= 1, got {k}")
    return (i + (k - 1) * s.n + (k - 1) * params.n_backups) * params.x


def horr_period(s: Scenario) -> Fraction:
    """Inter-recharge period of every UAV: (N + ceil((2g+c)/x)) * x."""
    return horr_parameters(s).period


def _dispatches(s: Scenario) -> Iterator[tuple[Fraction, int, Fraction]]:
    g = s.g[0]
    x = (s.f - 2 * g) / s.n
    k = 1
    while True:
        yield (k * x, (k - 1) % s.n + 1, g)
        k += 1


def horr_schedule(s: Scenario, horizon: Fraction) -> Schedule:
    """Full event stream of the rotation up to ``horizon``.

    Every replacement happens at a multiple of x, relieving locations in
    round-robin order; the stream uses exactly ``horr_fleet_size(s)`` UAVs
    once the horizon covers the start-up transient.
    """
    g = _homogeneous_g(s)
    horizon = Fraction(horizon)
    if horizon < 0:
        raise ScenarioError("horizon must be nonnegative")
    initial = [(i, g) for i in range(1, s.n + 1)]
    return rotation_schedule(
        initial, _dispatches(s), s.c, horizon, horr_period(s)
    )


def horr_schedule_cycles(s: Scenario, cycles: int) -> Schedule:
    """Schedule over an integer number of recharge periods."""
    if cycles < 0:
        raise ScenarioError("cycles must be nonnegative")
    return horr_schedule(s, horr_period(s) * cycles)
