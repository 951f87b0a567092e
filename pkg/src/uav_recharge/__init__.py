"""Minimum UAV fleets and cyclic recharge schedules for persistent coverage.

Public API re-exports; see the module docstrings for the algorithms.
"""

from .events import (
    MalformedScheduleError,
    Schedule,
    ScheduleEvent,
    read_schedule_csv,
    write_schedule_csv,
)
from .heterogeneous import (
    HerrParameters,
    KStarSearchError,
    check_ratio_sum_inequality,
    check_reciprocal_sum_inequality,
    compare_het_hom,
    herr_intervals,
    herr_kstar,
    herr_nk,
    herr_parameters,
    herr_schedule,
    herr_schedule_cycles,
    herr_sufficient_fleet,
    lower_bound_het,
)
from .homogeneous import (
    HorrParameters,
    horr_fleet_size,
    horr_parameters,
    horr_period,
    horr_recharge_instant,
    horr_schedule,
    horr_schedule_cycles,
)
from .partition import (
    GuardExceededError,
    Partition,
    PherrResult,
    ProbeTrace,
    opherr,
    partition_total,
    pherr,
    pherr_partition,
)
from .reduction import (
    BmidpInstance,
    KppInstance,
    ReductionError,
    bins_fit,
    bmidp_feasible,
    bmidp_instance,
    kpp_feasible,
    kpp_instance,
    kpp_solved_by,
    kpp_to_bmidp,
    verify_reduction_equivalence,
)
from .scenario import (
    HomogeneityError,
    Overhead,
    Scenario,
    ScenarioDistribution,
    ScenarioError,
    draw_scenario,
    load_scenario,
    overhead_of,
    save_scenario,
    scenario,
    validate_scenario,
)
from .sim import ValidationReport, measure_fleet, validate

__all__ = [name for name in dir() if not name.startswith("_")]
