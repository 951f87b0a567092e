"""Command-line interface.

Subcommands:

  fleet METHOD       print a fleet size (horr|herr|pherr|opherr|lb)
  schedule METHOD    write a schedule CSV (pherr/opherr: one CSV per subset)
  validate           replay a schedule CSV against a scenario
  experiment KIND    write an experiment results CSV (fig3|fig5|fig6|appc)
  reduce MODE        equal-sum partition / doubled-max packing tools

Exit codes: 0 success/feasible, 1 infeasible, 2 bad input, 3 method does not
fit the scenario, 4 size guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .events import MalformedScheduleError, read_schedule_csv, write_schedule_csv
from .experiments import default_spec, run_experiment, write_rows_csv
from .heterogeneous import (
    herr_parameters,
    herr_schedule,
    herr_sufficient_fleet,
    lower_bound_het,
)
from .homogeneous import horr_parameters, horr_schedule
from .partition import GuardExceededError, Partition, opherr, pherr_partition
from .rational import format_fraction, format_ms, from_ms, minutes, seconds
from .reduction import (
    ReductionError,
    bmidp_feasible,
    dump_weights,
    kpp_feasible,
    kpp_to_bmidp,
    load_bmidp_instance,
    load_kpp_instance,
    verify_reduction_equivalence,
)
from .scenario import HomogeneityError, Scenario, ScenarioError, load_scenario
from .sim import validate

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_BAD_INPUT = 2
EXIT_MISMATCH = 3
EXIT_GUARD = 4


def _fraction_list(text: str) -> list[Fraction]:
    return [Fraction(part.strip()) for part in text.split(",") if part.strip()]


def _int_list(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(part.strip()) for part in text.split(",") if part.strip()]


def _parse_partition(text: str) -> list[list[int]]:
    try:
        return [
            [int(v.strip()) for v in group.split(",") if v.strip()]
            for group in text.split(";")
        ]
    except ValueError as exc:
        raise ScenarioError(f"bad partition spec '{text}': {exc}") from exc


def _natural_cycle(s: Scenario) -> Fraction:
    if s.is_homogeneous:
        return horr_parameters(s).period
    return s.f - 2 * max(s.g)


def _partition_payload(p: Partition) -> dict:
    return {
        "subsets": [list(sub) for sub in p.subsets],
        "per_subset_fleet": list(p.per_subset_fleet),
        "total": p.total_fleet,
    }


def _fleet_report(method: str, s: Scenario) -> tuple[int, dict]:
    if method == "horr":
        params = horr_parameters(s)
        return params.m_total, {
            "x_ms": format_ms(params.x),
            "n_backups": params.n_backups,
            "m_total": params.m_total,
            "period_ms": format_ms(params.period),
        }
    if method == "herr":
        params = herr_parameters(s)
        return params.m_sufficient, {
            "order": list(params.order),
            "sorted_g_ms": [format_ms(g) for g in params.sorted_g],
            "x_ms": [format_ms(x) for x in params.x],
            "n_k": list(params.n_k),
            "k_star": list(params.k_star),
            "a_k": list(params.a_k),
            "m_sufficient": params.m_sufficient,
        }
    if method == "pherr":
        best, trace = pherr_partition(s)
        payload = _partition_payload(best)
        payload["probes"] = [_partition_payload(p) for p in trace.probed]
        payload["chosen_index"] = trace.chosen_index
        return best.total_fleet, payload
    if method == "opherr":
        raise AssertionError("handled by caller (needs guard)")
    params_lb = lower_bound_het(s)
    return params_lb, {"lower_bound": params_lb}


def cmd_fleet(args) -> int:
    s = load_scenario(args.scenario)
    if args.method == "opherr":
        best = opherr(s, max_n=args.guard_n)
        size, payload = best.total_fleet, _partition_payload(best)
    else:
        size, payload = _fleet_report(args.method, s)
    print(size)
    if args.report:
        Path(args.report).write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
    return EXIT_OK


def _subset_out_path(base: Path, index: int) -> Path:
    return base.with_name(f"{base.stem}_s{index}{base.suffix or '.csv'}")


def cmd_schedule(args) -> int:
    s = load_scenario(args.scenario)
    out = Path(args.out)
    cycles = args.horizon_cycles
    if args.method in ("horr", "herr"):
        if args.method == "horr":
            cycle = horr_parameters(s).period
            sched = horr_schedule(s, cycle * cycles)
        else:
            cycle = s.f - 2 * max(s.g)
            sched = herr_schedule(s, cycle * cycles)
        report = validate(s, sched, sched.horizon)
        if not report.feasible:
            print(report.to_json(), file=sys.stderr)
            return EXIT_INFEASIBLE
        write_schedule_csv(sched, out)
        print(out)
        return EXIT_OK
    if args.method == "pherr":
        partition = pherr_partition(s)[0]
    else:
        partition = opherr(s, max_n=args.guard_n)
    for index, subset in enumerate(partition.subsets, start=1):
        sub_scenario = s.subset(subset)
        cycle = sub_scenario.f - 2 * max(sub_scenario.g)
        sched = herr_schedule(sub_scenario, cycle * cycles)
        report = validate(sub_scenario, sched, sched.horizon)
        if not report.feasible:
            print(report.to_json(), file=sys.stderr)
            return EXIT_INFEASIBLE
        path = _subset_out_path(out, index)
        write_schedule_csv(sched, path)
        print(path)
    return EXIT_OK


def cmd_validate(args) -> int:
    s = load_scenario(args.scenario)
    events = read_schedule_csv(args.schedule)
    if args.horizon_ms is not None:
        horizon = from_ms(args.horizon_ms)
    else:
        horizon = _natural_cycle(s) * args.horizon_cycles
    report = validate(s, events, horizon)
    text = report.to_json()
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
    print(text)
    return EXIT_OK if report.feasible else EXIT_INFEASIBLE


def cmd_experiment(args) -> int:
    overrides: dict = {"seed": args.seed}
    if args.trials is not None:
        overrides["trials"] = args.trials
    if args.f_grid is not None:
        overrides["f_grid"] = tuple(minutes(v) for v in _fraction_list(args.f_grid))
    if args.delta_grid is not None:
        overrides["delta_grid"] = tuple(_fraction_list(args.delta_grid))
    if args.omega_grid is not None:
        overrides["omega_grid"] = tuple(_fraction_list(args.omega_grid))
    if args.n_range is not None:
        overrides["n_values"] = tuple(_int_list(args.n_range))
    if args.g_bar_min is not None:
        overrides["g_bar"] = minutes(Fraction(args.g_bar_min))
    if args.c_s is not None:
        overrides["c"] = seconds(Fraction(args.c_s))
    if args.guard_n is not None:
        overrides["guard_n"] = args.guard_n
    spec = default_spec(args.kind, **overrides)
    rows, _ = run_experiment(spec)
    write_rows_csv(rows, args.out)
    print(args.out)
    return EXIT_OK


def cmd_reduce(args) -> int:
    if args.mode == "kpp":
        inst = load_kpp_instance(args.instance)
        solution = kpp_feasible(inst, max_items=args.guard_items)
        print(json.dumps({"feasible": solution is not None, "partition": solution}))
        return EXIT_OK if solution is not None else EXIT_INFEASIBLE
    if args.mode == "bmidp":
        inst = load_bmidp_instance(args.instance)
        assignment = bmidp_feasible(inst, max_items=args.guard_items)
        print(json.dumps({"feasible": assignment is not None, "bins": assignment}))
        return EXIT_OK if assignment is not None else EXIT_INFEASIBLE
    inst = load_kpp_instance(args.instance)
    partition = _parse_partition(args.partition)
    if args.mode == "transform":
        weights, bins = kpp_to_bmidp(inst, partition)
        payload = dump_weights(weights, inst.n_parts)
        payload["bin_weights"] = [[format_fraction(w) for w in b] for b in bins]
        print(json.dumps(payload))
        return EXIT_OK
    equivalent = verify_reduction_equivalence(inst, partition)
    print(json.dumps({"equivalent": equivalent}))
    return EXIT_OK if equivalent else EXIT_INFEASIBLE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="uav-recharge",
        description="Fleet sizing and cyclic recharge schedules for persistent aerial coverage",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fleet = sub.add_parser("fleet", help="compute a fleet size")
    fleet.add_argument("method", choices=("horr", "herr", "pherr", "opherr", "lb"))
    fleet.add_argument("--scenario", required=True)
    fleet.add_argument("--report", help="write the method's JSON audit artifact")
    fleet.add_argument("--guard-n", type=int, default=12)
    fleet.set_defaults(func=cmd_fleet)

    schedule = sub.add_parser("schedule", help="emit a schedule CSV")
    schedule.add_argument("method", choices=("horr", "herr", "pherr", "opherr"))
    schedule.add_argument("--scenario", required=True)
    schedule.add_argument("--out", required=True)
    schedule.add_argument("--horizon-cycles", type=int, default=2)
    schedule.add_argument("--guard-n", type=int, default=12)
    schedule.set_defaults(func=cmd_schedule)

    val = sub.add_parser("validate", help="validate a schedule CSV")
    val.add_argument("--scenario", required=True)
    val.add_argument("--schedule", required=True)
    val.add_argument("--horizon-cycles", type=int, default=2)
    val.add_argument("--horizon-ms", type=int)
    val.add_argument("--out")
    val.set_defaults(func=cmd_validate)

    exp = sub.add_parser("experiment", help="run a seeded experiment to CSV")
    exp.add_argument("kind", choices=("fig3", "fig5", "fig6", "appc"))
    exp.add_argument("--out", required=True)
    exp.add_argument("--seed", type=int, default=0)
    exp.add_argument("--trials", type=int)
    exp.add_argument("--f-grid", help="comma-separated flight times in minutes")
    exp.add_argument("--delta-grid", help="comma-separated deviations in [0,1)")
    exp.add_argument("--omega-grid", help="comma-separated relative overheads")
    exp.add_argument("--n-range", help="location counts: 'A..B' or 'a,b,c'")
    exp.add_argument("--g-bar-min", help="average displacement in minutes")
    exp.add_argument("--c-s", help="recharge time in seconds")
    exp.add_argument("--guard-n", type=int)
    exp.set_defaults(func=cmd_experiment)

    red = sub.add_parser("reduce", help="partition/packing tools")
    red.add_argument("mode", choices=("kpp", "bmidp", "transform", "verify"))
    red.add_argument("--instance", required=True, help="instance JSON file")
    red.add_argument("--partition", help="item index groups, e.g. '0,1;2'")
    red.add_argument("--guard-items", type=int, default=12)
    red.set_defaults(func=cmd_reduce)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "reduce" and args.mode in ("transform", "verify") and not args.partition:
        parser.error("reduce transform/verify require --partition")
    try:
        return args.func(args)
    except GuardExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except HomogeneityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (ScenarioError, MalformedScheduleError, ReductionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
