"""Schedule events, the rotating-replacement event engine, and CSV I/O.

A schedule is a time-sorted stream of UAV events.  Each UAV cycles through

    takeoff -> replace -> depart -> land -> recharged -> takeoff -> ...

``replace`` marks arrival at a location (coverage starts there), ``depart``
marks leaving it (coverage ends); a replace and a depart at the same location
and instant form a seamless handover.  Takeoffs may happen at negative times:
the initial serving UAVs launch at -g_i so coverage starts exactly at t=0
with the outbound leg charged against the flight budget.
"""

from __future__ import annotations

import csv
import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .rational import format_ms, parse_ms

TAKEOFF = "takeoff"
REPLACE = "replace"
DEPART = "depart"
LAND = "land"
RECHARGED = "recharged"

EVENT_KINDS = (TAKEOFF, REPLACE, DEPART, LAND, RECHARGED)

# Fixed intra-instant ordering: the arriving UAV is listed before the one it
# replaces; a UAV that lands, finishes recharging, and takes off again at the
# same instant (possible with c = 0) must keep that causal order.
_KIND_ORDER = {REPLACE: 0, DEPART: 1, LAND: 2, RECHARGED: 3, TAKEOFF: 4}

CSV_HEADER = ("time_ms", "uav_id", "event", "location")


@dataclass(frozen=True)
class ScheduleEvent:
    time: Fraction
    uav_id: int
    kind: str
    location: int | None = None

    def sort_key(self):
        return (self.time, _KIND_ORDER[self.kind], self.uav_id)


@dataclass(frozen=True)
class Schedule:
    """Materialized event stream over a finite horizon.

    ``cycle`` is the schedule's repetition interval and ``horizon`` the
    half-open window [start, horizon) the events were generated for; only
    events with time < horizon are included.  ``uav_count`` is the number of
    distinct UAVs appearing in the stream.
    """

    events: tuple[ScheduleEvent, ...]
    cycle: Fraction
    horizon: Fraction
    uav_count: int

    def dispatch_times(self) -> list[Fraction]:
        """Times at which a serving UAV is sent to recharge (depart events)."""
        return [e.time for e in self.events if e.kind == DEPART]


def rotation_schedule(
    initial: Iterable[tuple[int, Fraction]],
    dispatches: Iterator[tuple[Fraction, int, Fraction]],
    recharge: Fraction,
    horizon: Fraction,
    cycle: Fraction,
) -> Schedule:
    """Run the rotating-replacement engine shared by both schedulers.

    ``initial`` lists (location, displacement) pairs in deployment order; one
    UAV per location takes off at -g and starts covering at t=0.
    ``dispatches`` yields (time, location, displacement) replacement instants
    in strictly increasing time order; at each one a backup takes off g
    earlier, relieves the serving UAV, and the relieved UAV flies home and
    recharges.  Backups are drawn from the ready pool FIFO (earliest
    recharge-complete first, ties by UAV id); a brand-new UAV is introduced
    only when no pooled UAV is ready at the required takeoff instant, so the
    stream uses exactly as many UAVs as the rotation truly needs.
    """
    events: list[ScheduleEvent] = []
    serving: dict[int, int] = {}
    next_id = 1
    for location, g in initial:
        uid = next_id
        next_id += 1
        serving[location] = uid
        events.append(ScheduleEvent(-g, uid, TAKEOFF, location))
        events.append(ScheduleEvent(Fraction(0), uid, REPLACE, location))

    g_max = max(g for _, g in initial)
    pool: list[tuple[Fraction, int]] = []  # (ready time, uav id) min-heap

    for time, location, g in dispatches:
        # Every event of a dispatch at `time` happens at >= time - g, so once
        # time - g_max >= horizon no later dispatch can contribute events.
        if time - g_max >= horizon:
            break
        takeoff_time = time - g
        if pool and pool[0][0] <= takeoff_time:
            _, backup = heapq.heappop(pool)
        else:
            backup = next_id
            next_id += 1
        relieved = serving[location]
        serving[location] = backup
        ready = time + g + recharge
        events.append(ScheduleEvent(takeoff_time, backup, TAKEOFF, location))
        events.append(ScheduleEvent(time, backup, REPLACE, location))
        events.append(ScheduleEvent(time, relieved, DEPART, location))
        events.append(ScheduleEvent(time + g, relieved, LAND))
        events.append(ScheduleEvent(ready, relieved, RECHARGED))
        heapq.heappush(pool, (ready, relieved))

    kept = sorted((e for e in events if e.time < horizon), key=ScheduleEvent.sort_key)
    used = len({e.uav_id for e in kept})
    return Schedule(events=tuple(kept), cycle=cycle, horizon=horizon, uav_count=used)


# --- CSV interchange ------------------------------------------------------
#
# Columns: time_ms (exact integer when representable, else "p/q"), uav_id,
# event, location (empty for land/recharged).

def write_schedule_csv(sched: Schedule | Iterable[ScheduleEvent], path) -> None:
    events = sched.events if isinstance(sched, Schedule) else tuple(sched)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for e in events:
            writer.writerow(
                [
                    format_ms(e.time),
                    e.uav_id,
                    e.kind,
                    "" if e.location is None else e.location,
                ]
            )


class MalformedScheduleError(ValueError):
    """Structurally invalid event stream or schedule CSV."""


def read_schedule_csv(path) -> tuple[ScheduleEvent, ...]:
    """Parse a schedule CSV, checking structure (not feasibility)."""
    events: list[ScheduleEvent] = []
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or tuple(header) != CSV_HEADER:
            raise MalformedScheduleError(
                f"bad header {header!r}, expected {list(CSV_HEADER)}"
            )
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != 4:
                raise MalformedScheduleError(f"line {lineno}: expected 4 columns")
            time_text, uav_text, kind, loc_text = row
            try:
                time = parse_ms(time_text)
                uav_id = int(uav_text)
            except ValueError as exc:
                raise MalformedScheduleError(f"line {lineno}: {exc}") from exc
            if uav_id < 0:
                raise MalformedScheduleError(f"line {lineno}: negative uav_id")
            if kind not in EVENT_KINDS:
                raise MalformedScheduleError(f"line {lineno}: unknown event '{kind}'")
            location: int | None
            if loc_text == "":
                location = None
            else:
                try:
                    location = int(loc_text)
                except ValueError as exc:
                    raise MalformedScheduleError(f"line {lineno}: {exc}") from exc
            events.append(ScheduleEvent(time, uav_id, kind, location))
    for prev, cur in zip(events, events[1:]):
        if cur.time < prev.time:
            raise MalformedScheduleError("events are not sorted by time")
    return tuple(events)
