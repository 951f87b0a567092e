"""Seeded Monte Carlo experiment runner with CSV output.

Four experiment kinds reproduce the numerical studies:

  fig3  homogeneous fleet size vs N for several flight budgets (closed form);
  fig5  partitioned-heuristic fleet vs N across displacement deviations;
  fig6  mean approximation factor (heuristic / lower bound) over a
        (deviation, overhead) grid;
  appc  sufficient-formula vs simulated usage vs heuristic vs exhaustive
        oracle on random instances.

Every (cell, trial) derives its own seed from the master seed, so results
are independent of evaluation order and worker count; aggregation sums exact
integers and rationals before any decimal rendering.  The runtime column is
informational wall-clock only and is the one column that varies between runs.
"""

from __future__ import annotations

import csv
import time
from dataclasses import dataclass
from fractions import Fraction

from .heterogeneous import herr_schedule_cycles, herr_sufficient_fleet, lower_bound_het
from .homogeneous import horr_fleet_size
from .partition import opherr, pherr_partition
from .rational import format_decimal, format_ms, minutes, seconds
from .rng import derive_seed
from .scenario import Scenario, ScenarioDistribution, ScenarioError, draw_scenario
from .sim import measure_fleet

CSV_COLUMNS = (
    "kind",
    "method",
    "n",
    "f_ms",
    "c_ms",
    "g_bar_ms",
    "delta",
    "omega",
    "trials",
    "seed",
    "fleet_mean",
    "fleet_std",
    "lb_mean",
    "approx_factor",
    "runtime_ms",
)

EXPERIMENT_KINDS = ("fig3", "fig5", "fig6", "appc")


@dataclass(frozen=True)
class ExperimentSpec:
    kind: str
    f_grid: tuple[Fraction, ...]
    n_values: tuple[int, ...]
    delta_grid: tuple[Fraction, ...]
    omega_grid: tuple[Fraction, ...]
    trials: int
    seed: int
    g_bar: Fraction
    c: Fraction
    guard_n: int = 12

    def __post_init__(self):
        if self.kind not in EXPERIMENT_KINDS:
            raise ScenarioError(f"unknown experiment kind '{self.kind}'")
        if not self.f_grid or not self.n_values or not self.delta_grid:
            raise ScenarioError("experiment grids must be nonempty")
        if self.trials < 1:
            raise ScenarioError("trials must be >= 1")
        if self.kind in ("fig6", "appc"):
            if len(self.f_grid) != 1:
                raise ScenarioError(f"{self.kind} requires a single fixed f")
            if not self.omega_grid:
                raise ScenarioError(f"{self.kind} requires an overhead grid")


def default_spec(kind: str, **overrides) -> ExperimentSpec:
    if kind not in EXPERIMENT_KINDS:
        raise ScenarioError(f"unknown experiment kind '{kind}'")
    base = {
        "f_grid": tuple(minutes(v) for v in (30, 45, 60)),
        "n_values": tuple(range(1, 31)),
        "delta_grid": (Fraction(0),),
        "omega_grid": (),
        "trials": 1,
        "seed": 20240 + EXPERIMENT_KINDS.index(kind),
        "g_bar": minutes(5),
        "c": seconds(15),
        "guard_n": 12,
    }
    tenths = tuple(Fraction(i, 10) for i in range(6))
    if kind == "fig5":
        base.update(delta_grid=tenths, trials=1000)
    elif kind == "fig6":
        base.update(
            f_grid=(minutes(45),),
            n_values=(10, 15),
            delta_grid=tenths,
            omega_grid=tuple(Fraction(i, 10) for i in range(1, 7)),
            trials=1000,
        )
    elif kind == "appc":
        base.update(
            f_grid=(minutes(45),),
            n_values=(10,),
            delta_grid=(Fraction(3, 10), Fraction(5, 10)),
            # 2*g_bar/f for the 5 min / 45 min reference point
            omega_grid=(Fraction(2, 9),),
            trials=1000,
        )
    base.update(overrides)
    return ExperimentSpec(kind=kind, **base)


@dataclass(frozen=True)
class AppcTrial:
    """Per-trial fleet sizes used for the gap statistics."""

    seed: int
    suff: int
    herr_sim: int
    pherr: int
    opherr: int
    lower_bound: int


def _mean(values: list[int] | list[Fraction]) -> Fraction:
    return Fraction(sum(values)) / len(values)


def _std(values: list[int]) -> float:
    mean = _mean(values)
    var = sum(((v - mean) ** 2 for v in values), Fraction(0)) / len(values)
    return float(var) ** 0.5


def _row(
    spec: ExperimentSpec,
    method: str,
    n: int,
    f: Fraction,
    g_bar: Fraction,
    delta: Fraction,
    omega: Fraction,
    fleets: list[int],
    lbs: list[int],
    started: float,
) -> dict:
    ratios = [Fraction(m, lb) for m, lb in zip(fleets, lbs)]
    return {
        "kind": spec.kind,
        "method": method,
        "n": n,
        "f_ms": format_ms(f),
        "c_ms": format_ms(spec.c),
        "g_bar_ms": format_ms(g_bar),
        "delta": format_decimal(delta, 6, trim=True),
        "omega": format_decimal(omega, 6, trim=True),
        "trials": len(fleets),
        "seed": spec.seed,
        "fleet_mean": format_decimal(_mean(fleets), 6),
        "fleet_std": f"{_std(fleets):.6f}",
        "lb_mean": format_decimal(_mean(lbs), 6),
        "approx_factor": format_decimal(_mean(ratios), 6),
        "runtime_ms": int((time.monotonic() - started) * 1000),
    }


def _drawn(spec: ExperimentSpec, n: int, g_bar: Fraction, delta: Fraction, f: Fraction, cell: int, trial: int) -> Scenario:
    dist = ScenarioDistribution(
        n_locations=n,
        g_bar=g_bar,
        delta=delta,
        seed=derive_seed(spec.seed, cell, trial),
    )
    return draw_scenario(dist, f, spec.c)


def run_fig3(spec: ExperimentSpec) -> list[dict]:
    rows = []
    for f in spec.f_grid:
        for n in spec.n_values:
            started = time.monotonic()
            s = Scenario(f, spec.c, (spec.g_bar,) * n)
            m = horr_fleet_size(s)
            lb = lower_bound_het(s)
            rows.append(
                _row(spec, "horr", n, f, spec.g_bar, Fraction(0), 2 * spec.g_bar / f, [m], [lb], started)
            )
    return rows


def run_fig5(spec: ExperimentSpec) -> list[dict]:
    rows = []
    cell = 0
    for f in spec.f_grid:
        for delta in spec.delta_grid:
            for n in spec.n_values:
                started = time.monotonic()
                fleets, lbs = [], []
                for trial in range(spec.trials):
                    s = _drawn(spec, n, spec.g_bar, delta, f, cell, trial)
                    best, _ = pherr_partition(s)
                    fleets.append(best.total_fleet)
                    lbs.append(lower_bound_het(s))
                rows.append(
                    _row(spec, "pherr", n, f, spec.g_bar, delta, 2 * spec.g_bar / f, fleets, lbs, started)
                )
                cell += 1
    return rows


def run_fig6(spec: ExperimentSpec) -> list[dict]:
    rows = []
    f = spec.f_grid[0]
    cell = 0
    for n in spec.n_values:
        for omega in spec.omega_grid:
            g_bar = omega * f / 2
            for delta in spec.delta_grid:
                started = time.monotonic()
                fleets, lbs = [], []
                for trial in range(spec.trials):
                    s = _drawn(spec, n, g_bar, delta, f, cell, trial)
                    best, _ = pherr_partition(s)
                    fleets.append(best.total_fleet)
                    lbs.append(lower_bound_het(s))
                rows.append(_row(spec, "pherr", n, f, g_bar, delta, omega, fleets, lbs, started))
                cell += 1
    return rows


def run_appc(spec: ExperimentSpec) -> tuple[list[dict], dict[tuple, list[AppcTrial]]]:
    rows = []
    records: dict[tuple, list[AppcTrial]] = {}
    f = spec.f_grid[0]
    cell = 0
    for n in spec.n_values:
        for omega in spec.omega_grid:
            g_bar = omega * f / 2
            for delta in spec.delta_grid:
                started = time.monotonic()
                trials: list[AppcTrial] = []
                for trial in range(spec.trials):
                    s = _drawn(spec, n, g_bar, delta, f, cell, trial)
                    trials.append(
                        AppcTrial(
                            seed=derive_seed(spec.seed, cell, trial),
                            suff=herr_sufficient_fleet(s),
                            herr_sim=measure_fleet(s, herr_schedule_cycles, 3),
                            pherr=pherr_partition(s)[0].total_fleet,
                            opherr=opherr(s, max_n=spec.guard_n).total_fleet,
                            lower_bound=lower_bound_het(s),
                        )
                    )
                lbs = [t.lower_bound for t in trials]
                for method, fleets in (
                    ("suff", [t.suff for t in trials]),
                    ("herr", [t.herr_sim for t in trials]),
                    ("pherr", [t.pherr for t in trials]),
                    ("opherr", [t.opherr for t in trials]),
                ):
                    rows.append(_row(spec, method, n, f, g_bar, delta, omega, fleets, lbs, started))
                records[(n, omega, delta)] = trials
                cell += 1
    return rows, records


def run_experiment(spec: ExperimentSpec):
    """Dispatch by kind; returns (rows, appc per-trial records or None)."""
    if spec.kind == "fig3":
        return run_fig3(spec), None
    if spec.kind == "fig5":
        return run_fig5(spec), None
    if spec.kind == "fig6":
        return run_fig6(spec), None
    rows, records = run_appc(spec)
    return rows, records


def write_rows_csv(rows: list[dict], path) -> None:
    """ResultRow CSV: fixed column order, header row, UTF-8, LF endings."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow(row)
