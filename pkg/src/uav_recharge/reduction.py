"""Equal-sum number partitioning, doubled-max bin packing, and the exact
transform connecting them.

An equal-sum instance asks to split nonnegative items into N subsets whose
sums all equal sum(items)/N.  The doubled-max packing asks for N unit bins
where each bin must also absorb a second copy of its largest item:

    sum(w_j in bin) + max(w_j in bin) <= 1.

Given a candidate partition {S_k} of an items instance, the transform

    w_j = N / (I + N * i_max(k)) * i_j        for i_j in S_k

produces bins that fit exactly when (and only when) the partition has equal
sums; in the solved case every bin's total-plus-max equals 1 exactly, which
this module checks with exact rationals.  Both feasibility checkers are
exhaustive and guarded by item count.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .partition import GuardExceededError
from .rational import format_fraction

DEFAULT_GUARD_ITEMS = 12


class ReductionError(ValueError):
    """Invalid instance or degenerate partition for the transform."""


@dataclass(frozen=True)
class KppInstance:
    """Nonnegative items to split into n_parts equal-sum subsets."""

    items: tuple[Fraction, ...]
    n_parts: int

    def __post_init__(self):
        if not self.items:
            raise ReductionError("instance needs at least one item")
        if any(i < 0 for i in self.items):
            raise ReductionError("items must be nonnegative")
        if all(i == 0 for i in self.items):
            raise ReductionError("instance needs at least one positive item")
        if self.n_parts < 1:
            raise ReductionError("n_parts must be >= 1")

    @property
    def total(self) -> Fraction:
        return sum(self.items, Fraction(0))


@dataclass(frozen=True)
class BmidpInstance:
    """Items with sizes in (0, 1] to pack into n_bins doubled-max unit bins."""

    weights: tuple[Fraction, ...]
    n_bins: int

    def __post_init__(self):
        if not self.weights:
            raise ReductionError("instance needs at least one weight")
        if any(not 0 < w <= 1 for w in self.weights):
            raise ReductionError("weights must lie in (0, 1]")
        if self.n_bins < 1:
            raise ReductionError("n_bins must be >= 1")


def kpp_instance(items, n_parts: int) -> KppInstance:
    return KppInstance(tuple(Fraction(i) for i in items), n_parts)


def bmidp_instance(weights, n_bins: int) -> BmidpInstance:
    return BmidpInstance(tuple(Fraction(w) for w in weights), n_bins)


def _guard(count: int, max_items: int) -> None:
    if count > max_items:
        raise GuardExceededError(
            f"{count} items exceed the exhaustive-search guard {max_items}"
        )


def kpp_feasible(
    inst: KppInstance, max_items: int = DEFAULT_GUARD_ITEMS
) -> list[list[int]] | None:
    """A partition into n_parts subsets of equal sum, or None.

    Exhaustive search over assignments, largest items first; branches that
    overfill a part are cut, and parts with identical current sums are
    interchangeable so only the first is tried.  Returns item indices.
    """
    _guard(len(inst.items), max_items)
    target = inst.total / inst.n_parts
    order = sorted(range(len(inst.items)), key=lambda j: inst.items[j], reverse=True)
    sums = [Fraction(0)] * inst.n_parts
    parts: list[list[int]] = [[] for _ in range(inst.n_parts)]

    def rec(pos: int) -> bool:
        if pos == len(order):
            return all(s == target for s in sums)
        j = order[pos]
        value = inst.items[j]
        tried: set[Fraction] = set()
        for k in range(inst.n_parts):
            if sums[k] in tried:
                continue
            tried.add(sums[k])
            if sums[k] + value > target:
                continue
            sums[k] += value
            parts[k].append(j)
            if rec(pos + 1):
                return True
            sums[k] -= value
            parts[k].pop()
        return False

    if rec(0):
        return [sorted(p) for p in parts]
    return None


def bmidp_feasible(
    inst: BmidpInstance, max_items: int = DEFAULT_GUARD_ITEMS
) -> list[list[int]] | None:
    """An assignment into n_bins satisfying sum + max <= 1 per bin, or None.

    Items are placed largest first, so the first item in a bin is its
    maximum and the doubled-max constraint can be checked incrementally.
    Bins may stay empty.  Returns item indices.
    """
    _guard(len(inst.weights), max_items)
    order = sorted(range(len(inst.weights)), key=lambda j: inst.weights[j], reverse=True)
    sums = [Fraction(0)] * inst.n_bins
    maxes = [Fraction(0)] * inst.n_bins
    bins: list[list[int]] = [[] for _ in range(inst.n_bins)]

    def rec(pos: int) -> bool:
        if pos == len(order):
            return True
        j = order[pos]
        w = inst.weights[j]
        tried: set[Fraction] = set()
        for k in range(inst.n_bins):
            if sums[k] in tried:
                continue
            tried.add(sums[k])
            new_max = maxes[k] if maxes[k] >= w else w
            if sums[k] + w + new_max > 1:
                continue
            old_max = maxes[k]
            sums[k] += w
            maxes[k] = new_max
            bins[k].append(j)
            if rec(pos + 1):
                return True
            sums[k] -= w
            maxes[k] = old_max
            bins[k].pop()
        return False

    if rec(0):
        return [sorted(b) for b in bins]
    return None


def _check_item_partition(inst: KppInstance, partition: Sequence[Sequence[int]]) -> None:
    if len(partition) != inst.n_parts:
        raise ReductionError(
            f"partition has {len(partition)} subsets, instance wants {inst.n_parts}"
        )
    seen: set[int] = set()
    for subset in partition:
        if not subset:
            raise ReductionError("partition contains an empty subset")
        for j in subset:
            if not 0 <= j < len(inst.items):
                raise ReductionError(f"item index {j} out of range")
            if j in seen:
                raise ReductionError(f"item index {j} assigned twice")
            seen.add(j)
    if len(seen) != len(inst.items):
        raise ReductionError("partition does not cover all items")


def kpp_to_bmidp(
    inst: KppInstance, partition: Sequence[Sequence[int]]
) -> tuple[tuple[Fraction, ...], list[list[Fraction]]]:
    """Exact weights w_j = N/(I + N*i_max(k)) * i_j plus the induced bins.

    Every subset must have a positive maximum; an all-zero subset makes the
    weights degenerate (w = 0) and is rejected.
    """
    _check_item_partition(inst, partition)
    n = inst.n_parts
    total = inst.total
    weights: list[Fraction | None] = [None] * len(inst.items)
    bins: list[list[Fraction]] = []
    for subset in partition:
        i_max = max(inst.items[j] for j in subset)
        if i_max == 0:
            raise ReductionError(
                "subset with zero maximum: transform weights would leave (0, 1]"
            )
        scale = Fraction(n, 1) / (total + n * i_max)
        bin_weights = []
        for j in subset:
            w = scale * inst.items[j]
            weights[j] = w
            bin_weights.append(w)
        bins.append(bin_weights)
    return tuple(weights), bins  # type: ignore[arg-type]


def bins_fit(bins: Sequence[Sequence[Fraction]]) -> bool:
    """Doubled-max feasibility of explicit bins: sum + max <= 1 for each."""
    return all(sum(b, Fraction(0)) + max(b) <= 1 for b in bins)


def kpp_solved_by(inst: KppInstance, partition: Sequence[Sequence[int]]) -> bool:
    """Whether the partition has equal subset sums total/N."""
    _check_item_partition(inst, partition)
    target = inst.total / inst.n_parts
    return all(
        sum((inst.items[j] for j in subset), Fraction(0)) == target
        for subset in partition
    )


def verify_reduction_equivalence(
    inst: KppInstance, partition: Sequence[Sequence[int]]
) -> bool:
    """The transform's biconditional, checked on one candidate partition:
    equal sums hold iff the constructed bins fit.  True for every input."""
    _, bins = kpp_to_bmidp(inst, partition)
    return kpp_solved_by(inst, partition) == bins_fit(bins)


# --- instance files -------------------------------------------------------

def load_kpp_instance(path) -> KppInstance:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    try:
        return kpp_instance(data["items"], data["n"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ReductionError(f"bad items instance file: {exc}") from exc


def load_bmidp_instance(path) -> BmidpInstance:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    try:
        return bmidp_instance(data["weights"], data["bins"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ReductionError(f"bad weights instance file: {exc}") from exc


def dump_weights(weights: Sequence[Fraction], n_bins: int) -> dict:
    return {"weights": [format_fraction(w) for w in weights], "bins": n_bins}
