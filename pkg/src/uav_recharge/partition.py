"""Partition search: the linear peel heuristic and the exhaustive oracle.

Splitting the location set and scheduling each subset independently frees the
near locations from the long cycle forced by the far ones.  The peel search
starts from the whole set sorted by displacement and repeatedly moves the
furthest location of the leading subset into a new singleton, keeping the
best total seen.  The exhaustive oracle enumerates every set partition
(restricted growth strings) and is guarded because the count is the Bell
number of N.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .events import Schedule
from .heterogeneous import (
    _scale_ints,
    _sufficient_fleet_ints,
    herr_schedule_cycles,
)
from .scenario import Scenario, ScenarioError, validate_scenario

DEFAULT_GUARD_N = 12


class GuardExceededError(ScenarioError):
    """Instance too large for an exhaustive search guard."""


@dataclass(frozen=True)
class Partition:
    """Ordered decomposition of the location set with per-subset fleets."""

    subsets: tuple[tuple[int, ...], ...]
    per_subset_fleet: tuple[int, ...]
    total_fleet: int


@dataclass(frozen=True)
class ProbeTrace:
    """Partitions probed by the peel search, in probe order."""

    probed: tuple[Partition, ...]
    chosen_index: int

    @property
    def totals(self) -> tuple[int, ...]:
        return tuple(p.total_fleet for p in self.probed)


@dataclass(frozen=True)
class PherrResult:
    partition: Partition
    trace: ProbeTrace
    schedules: tuple[Schedule, ...]


class _SubsetFleet:
    """Per-subset sufficient-fleet evaluator over one scenario.

    The scenario is integer-rescaled once; per-subset results are memoized
    globally by (f, c, sorted g) content, so repeated probes and exhaustive
    enumeration stay cheap.
    """

    def __init__(self, s: Scenario):
        validate_scenario(s)
        self.s = s
        self.f_i, self.c_i, self.g_i = _scale_ints(s.f, s.c, s.g)

    def of_indices(self, locations: Sequence[int]) -> int:
        g = tuple(sorted(self.g_i[i - 1] for i in locations))
        return _sufficient_fleet_ints(self.f_i, self.c_i, g)

    def of_mask(self, mask: int) -> int:
        g = tuple(sorted(self.g_i[i] for i in range(self.s.n) if mask >> i & 1))
        return _sufficient_fleet_ints(self.f_i, self.c_i, g)


def _check_partition(s: Scenario, subsets: Sequence[Sequence[int]]) -> None:
    seen: set[int] = set()
    for subset in subsets:
        if not subset:
            raise ScenarioError("partition contains an empty subset")
        for i in subset:
            if not 1 <= i <= s.n:
                raise ScenarioError(f"location index {i} out of range 1..{s.n}")
            if i in seen:
                raise ScenarioError(f"location {i} appears in more than one subset")
            seen.add(i)
    if len(seen) != s.n:
        missing = sorted(set(range(1, s.n + 1)) - seen)
        raise ScenarioError(f"partition does not cover locations {missing}")


def _build_partition(evaluator: _SubsetFleet, subsets: Sequence[Sequence[int]]) -> Partition:
    fleets = tuple(evaluator.of_indices(sub) for sub in subsets)
    return Partition(
        subsets=tuple(tuple(sorted(sub)) for sub in subsets),
        per_subset_fleet=fleets,
        total_fleet=sum(fleets),
    )


def partition_total(s: Scenario, subsets: Sequence[Sequence[int]]) -> int:
    """Total fleet of a candidate partition: sum of per-subset fleets."""
    _check_partition(s, subsets)
    return _build_partition(_SubsetFleet(s), subsets).total_fleet


def pherr_partition(s: Scenario) -> tuple[Partition, ProbeTrace]:
    """Linear peel search over partitions; returns the best probed one.

    Probe t is {closest N-t+1 locations} followed by t-1 singletons of the
    furthest locations.  Probing continues while the new total does not
    exceed the previous one, and stops once the leading subset is a
    singleton.  Among equal totals the earliest probe wins.
    """
    validate_scenario(s)
    evaluator = _SubsetFleet(s)
    by_distance = sorted(range(1, s.n + 1), key=lambda i: (s.g[i - 1], i))

    def probe(t: int) -> Partition:
        head = by_distance[: s.n - t + 1]
        tail = [[i] for i in by_distance[s.n - t + 1 :]]
        return _build_partition(evaluator, [head, *tail])

    probed = [probe(1)]
    m = probed[-1].total_fleet
    m_new = m
    while m_new <= m:
        m = m_new
        if len(probed[-1].subsets[0]) == 1:
            break
        probed.append(probe(len(probed) + 1))
        m_new = probed[-1].total_fleet

    totals = [p.total_fleet for p in probed]
    chosen = totals.index(min(totals))
    return probed[chosen], ProbeTrace(probed=tuple(probed), chosen_index=chosen)


def pherr(s: Scenario, cycles: int = 2) -> PherrResult:
    """Best peel-search partition plus one HeRR schedule per subset."""
    best, trace = pherr_partition(s)
    schedules = tuple(
        herr_schedule_cycles(s.subset(sub), cycles) for sub in best.subsets
    )
    return PherrResult(partition=best, trace=trace, schedules=schedules)


def _iter_partition_masks(n: int):
    """All set partitions of {0..n-1} as lists of bitmasks, in restricted
    growth order: element 0 opens block 0, each element joins an existing
    block or opens the next one.  Blocks are ordered by their minimum."""
    blocks: list[int] = []

    def rec(i: int):
        if i == n:
            yield list(blocks)
            return
        bit = 1 << i
        for j in range(len(blocks)):
            blocks[j] |= bit
            yield from rec(i + 1)
            blocks[j] &= ~bit
        blocks.append(bit)
        yield from rec(i + 1)
        blocks.pop()

    yield from rec(0)


def _mask_to_indices(mask: int) -> tuple[int, ...]:
    return tuple(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def opherr(
    s: Scenario, max_n: int = DEFAULT_GUARD_N, contiguous_only: bool = False
) -> Partition:
    """Exhaustive minimum over partitions (the oracle the heuristic is judged
    against).  Ties prefer fewer subsets, then lexicographically smaller
    tuples of subset minima.

    ``contiguous_only`` restricts the search to contiguous runs of the
    sorted-by-displacement order (2^(N-1) candidates instead of Bell(N));
    that mode is NOT exhaustive and exists only to probe larger N.
    """
    validate_scenario(s)
    if s.n > max_n:
        raise GuardExceededError(
            f"N={s.n} exceeds the exhaustive-search guard {max_n}"
        )
    evaluator = _SubsetFleet(s)

    best_key: tuple | None = None
    best_masks: list[int] | None = None
    if contiguous_only:
        by_distance = sorted(range(s.n), key=lambda i: (s.g[i], i + 1))
        for cuts in range(1 << max(s.n - 1, 0)):
            masks = []
            current = 1 << by_distance[0]
            for pos in range(1, s.n):
                if cuts >> (pos - 1) & 1:
                    masks.append(current)
                    current = 0
                current |= 1 << by_distance[pos]
            masks.append(current)
            total = sum(evaluator.of_mask(m) for m in masks)
            key = (total, len(masks), tuple(min(_mask_to_indices(m)) for m in masks))
            if best_key is None or key < best_key:
                best_key, best_masks = key, masks
    else:
        fleet_cache: dict[int, int] = {}

        def fleet(mask: int) -> int:
            value = fleet_cache.get(mask)
            if value is None:
                value = evaluator.of_mask(mask)
                fleet_cache[mask] = value
            return value

        for masks in _iter_partition_masks(s.n):
            total = 0
            for m in masks:
                total += fleet(m)
            if best_key is not None and total > best_key[0]:
                continue
            minima = tuple((m & -m).bit_length() for m in masks)
            key = (total, len(masks), minima)
            if best_key is None or key < best_key:
                best_key, best_masks = key, list(masks)

    assert best_masks is not None
    subsets = [_mask_to_indices(m) for m in best_masks]
    return _build_partition(evaluator, subsets)
