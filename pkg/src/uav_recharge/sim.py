"""Discrete-event schedule validation and fleet measurement.

Replays an event stream with exact rational time and checks the persistent
service contract over [0, horizon):

  (a) every location is covered at every instant, with coverage intervals
      closed at arrival and open at departure (a replace and a depart at the
      same instant hand over seamlessly);
  (b) no UAV stays airborne longer than the flight budget f (equality is
      allowed: the homogeneous rotation is exactly tight);
  (c) every ground dwell between landing and the next takeoff lasts >= c;
  (d) every flight leg takes exactly the location's displacement time.

Structural problems (unsorted events, broken per-UAV event alternation) raise
MalformedScheduleError and are reported separately from infeasibility.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from .events import (
    DEPART,
    LAND,
    RECHARGED,
    REPLACE,
    TAKEOFF,
    MalformedScheduleError,
    Schedule,
    ScheduleEvent,
)
from .rational import format_ms
from .scenario import Scenario, ScenarioError, validate_scenario

# A takeoff straight after landing (recharge skipped or cut short) is
# structurally legal; the dwell check reports it as infeasible instead.
_NEXT_KINDS = {
    TAKEOFF: (REPLACE,),
    REPLACE: (DEPART,),
    DEPART: (LAND,),
    LAND: (RECHARGED, TAKEOFF),
    RECHARGED: (TAKEOFF,),
}


@dataclass(frozen=True)
class ValidationReport:
    feasible: bool
    gaps: tuple[tuple[int, tuple[Fraction, Fraction]], ...]
    battery_violations: tuple[tuple[int, Fraction, Fraction], ...]
    recharge_violations: tuple[tuple[int, Fraction, Fraction], ...]
    travel_violations: tuple[tuple[int, Fraction, Fraction], ...]
    peak_fleet: int
    per_cycle_service: dict[int, Fraction] = field(default_factory=dict)

    def to_json(self) -> str:
        def ms(t: Fraction) -> str:
            return format_ms(t)

        payload = {
            "feasible": self.feasible,
            "gaps": [
                {"location": loc, "from_ms": ms(a), "to_ms": ms(b)}
                for loc, (a, b) in self.gaps
            ],
            "battery_violations": [
                {"uav_id": u, "airborne_ms": ms(d), "limit_ms": ms(f)}
                for u, d, f in self.battery_violations
            ],
            "recharge_violations": [
                {"uav_id": u, "dwell_ms": ms(d), "required_ms": ms(c)}
                for u, d, c in self.recharge_violations
            ],
            "travel_violations": [
                {"uav_id": u, "leg_ms": ms(d), "expected_ms": ms(g)}
                for u, d, g in self.travel_violations
            ],
            "peak_fleet": self.peak_fleet,
            "per_cycle_service": {
                str(loc): ms(dur) for loc, dur in sorted(self.per_cycle_service.items())
            },
        }
        return json.dumps(payload, indent=2)


def _check_structure(events: tuple[ScheduleEvent, ...], n_locations: int) -> None:
    last_time: Fraction | None = None
    expected: dict[int, str] = {}
    serving_loc: dict[int, int] = {}
    for e in events:
        if last_time is not None and e.time < last_time:
            raise MalformedScheduleError("events are not sorted by time")
        last_time = e.time
        if e.kind not in _NEXT_KINDS:
            raise MalformedScheduleError(f"unknown event kind '{e.kind}'")
        if e.kind in (TAKEOFF, REPLACE, DEPART):
            if e.location is None:
                raise MalformedScheduleError(f"{e.kind} event requires a location")
            if not 1 <= e.location <= n_locations:
                raise MalformedScheduleError(
                    f"location {e.location} out of range 1..{n_locations}"
                )
        elif e.location is not None:
            raise MalformedScheduleError(f"{e.kind} event must not carry a location")
        allowed = expected.get(e.uav_id, (TAKEOFF,))
        if e.kind not in allowed:
            raise MalformedScheduleError(
                f"uav {e.uav_id}: expected {' or '.join(allowed)} next, "
                f"got {e.kind} at t={e.time}"
            )
        if e.kind == REPLACE and serving_loc.get(e.uav_id) != e.location:
            raise MalformedScheduleError(
                f"uav {e.uav_id}: replace at location {e.location} does not match "
                f"takeoff destination {serving_loc.get(e.uav_id)}"
            )
        if e.kind == DEPART and serving_loc.get(e.uav_id) != e.location:
            raise MalformedScheduleError(
                f"uav {e.uav_id}: depart from location {e.location} but was serving "
                f"{serving_loc.get(e.uav_id)}"
            )
        if e.kind == TAKEOFF:
            serving_loc[e.uav_id] = e.location
        expected[e.uav_id] = _NEXT_KINDS[e.kind]


def _coverage_gaps(
    events: tuple[ScheduleEvent, ...], n_locations: int, horizon: Fraction
) -> list[tuple[int, tuple[Fraction, Fraction]]]:
    stints: dict[int, list[tuple[Fraction, Fraction | None]]] = {
        loc: [] for loc in range(1, n_locations + 1)
    }
    open_stint: dict[tuple[int, int], Fraction] = {}
    for e in events:
        if e.kind == REPLACE:
            open_stint[(e.location, e.uav_id)] = e.time
        elif e.kind == DEPART:
            start = open_stint.pop((e.location, e.uav_id))
            stints[e.location].append((start, e.time))
    for (loc, _uav), start in open_stint.items():
        stints[loc].append((start, None))

    gaps: list[tuple[int, tuple[Fraction, Fraction]]] = []
    for loc in range(1, n_locations + 1):
        covered_until = Fraction(0)
        for start, end in sorted(stints[loc], key=lambda p: p[0]):
            if end is not None and end <= covered_until:
                continue
            if start > covered_until:
                gaps.append((loc, (covered_until, min(start, horizon))))
            covered_until = horizon if end is None else max(covered_until, end)
            if covered_until >= horizon:
                break
        if covered_until < horizon:
            gaps.append((loc, (covered_until, horizon)))
    return gaps


def _regime_service(
    events: tuple[ScheduleEvent, ...], n_locations: int
) -> dict[int, Fraction]:
    # Per location: duration of the last completed stint, skipping each
    # location's first stint (the start-up transient).  Defined only once a
    # location has seen at least two completed stints.
    completed: dict[int, list[Fraction]] = {loc: [] for loc in range(1, n_locations + 1)}
    open_since: dict[tuple[int, int], Fraction] = {}
    for e in events:
        if e.kind == REPLACE:
            open_since[(e.location, e.uav_id)] = e.time
        elif e.kind == DEPART:
            start = open_since.pop((e.location, e.uav_id))
            completed[e.location].append(e.time - start)
    return {
        loc: durations[-1]
        for loc, durations in completed.items()
        if len(durations) >= 2
    }


def validate(
    s: Scenario, sched: Schedule | Iterable[ScheduleEvent], horizon: Fraction
) -> ValidationReport:
    """Replay a schedule and check the full service contract over [0, horizon)."""
    validate_scenario(s)
    horizon = Fraction(horizon)
    if horizon <= 0:
        raise ScenarioError("horizon must be positive")
    events = sched.events if isinstance(sched, Schedule) else tuple(sched)
    _check_structure(events, s.n)

    gaps = tuple(_coverage_gaps(events, s.n, horizon))

    battery: list[tuple[int, Fraction, Fraction]] = []
    recharge: list[tuple[int, Fraction, Fraction]] = []
    travel: list[tuple[int, Fraction, Fraction]] = []
    takeoff_at: dict[int, Fraction] = {}
    depart_at: dict[int, Fraction] = {}
    depart_from: dict[int, int] = {}
    land_at: dict[int, Fraction] = {}
    for e in events:
        if e.kind == TAKEOFF:
            takeoff_at[e.uav_id] = e.time
            if e.uav_id in land_at:
                dwell = e.time - land_at[e.uav_id]
                if dwell < s.c:
                    recharge.append((e.uav_id, dwell, s.c))
        elif e.kind == REPLACE:
            leg = e.time - takeoff_at[e.uav_id]
            expected = s.displacement(e.location)
            if leg != expected:
                travel.append((e.uav_id, leg, expected))
        elif e.kind == DEPART:
            depart_at[e.uav_id] = e.time
            depart_from[e.uav_id] = e.location
        elif e.kind == LAND:
            leg = e.time - depart_at[e.uav_id]
            expected = s.displacement(depart_from[e.uav_id])
            if leg != expected:
                travel.append((e.uav_id, leg, expected))
            span = e.time - takeoff_at.pop(e.uav_id)
            if span > s.f:
                battery.append((e.uav_id, span, s.f))
            land_at[e.uav_id] = e.time
    # A UAV still airborne at the end of the stream violates the budget only
    # if even an immediate landing could not have respected it.
    for uav_id, start in takeoff_at.items():
        if horizon - start > s.f:
            battery.append((uav_id, horizon - start, s.f))

    peak = len({e.uav_id for e in events})
    feasible = not gaps and not battery and not recharge and not travel
    return ValidationReport(
        feasible=feasible,
        gaps=gaps,
        battery_violations=tuple(battery),
        recharge_violations=tuple(recharge),
        travel_violations=tuple(travel),
        peak_fleet=peak,
        per_cycle_service=_regime_service(events, s.n),
    )


def measure_fleet(
    s: Scenario,
    producer: Callable[[Scenario, int], Schedule],
    cycles: int,
    max_extra: int = 64,
) -> int:
    """Distinct UAVs a periodic schedule actually uses, once stabilized.

    ``producer(s, k)`` must return a k-cycle schedule.  New UAVs can keep
    entering until the return pipeline is primed, which can take more than
    one cycle when a relieved UAV's next reachable slot lies several cycles
    ahead; the count is therefore measured at the first horizon (starting
    from ``cycles``, at least 2) where one further cycle adds no UAV.  The
    stabilized schedule must validate feasible.
    """
    if cycles < 2:
        raise ScenarioError("cycles must be >= 2 to pass the start-up transient")
    horizon_cycles = max(cycles, 2)
    sched = producer(s, horizon_cycles)
    while True:
        nxt = producer(s, horizon_cycles + 1)
        if nxt.uav_count == sched.uav_count:
            break
        sched = nxt
        horizon_cycles += 1
        if horizon_cycles > cycles + max_extra:
            raise RuntimeError(
                f"fleet usage did not stabilize within {max_extra} extra cycles"
            )
    report = validate(s, sched, sched.horizon)
    if not report.feasible:
        raise ScenarioError(f"schedule is infeasible: {report.to_json()}")
    return sched.uav_count
