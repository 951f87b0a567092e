"""HeRR: rotating recharge scheduling for heterogeneous location sets.

Locations are sorted by displacement; location j (sorted order) is relieved
every cycle of length f - 2*g_max at an interval x_j proportional to g_j:

    x_j = (f - 2*g_max) / sum(g) * g_j

The sufficient fleet is I + max_k n_k, where n_k counts how many further
replacements fit inside the window a relieved UAV needs before it can serve
again (fly home, recharge, fly back out to the first reachable slot k*).
Indices beyond I wrap around cyclically.

All searches run on a common-denominator integer scaling of the scenario, so
every comparison is exact; the knife-edge cases (window exactly equal to the
available time) decide fleet sizes and must not be lost to rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterator, Sequence

from .events import Schedule, rotation_schedule
from .rational import ceil_div
from .scenario import Scenario, ScenarioError, validate_scenario


class KStarSearchError(RuntimeError):
    """The cyclic k* search exceeded its derived bound (malformed input)."""


@dataclass(frozen=True)
class HerrParameters:
    """Sorted displacements, per-location intervals, and the fleet bound.

    ``order`` maps sorted position (0-based) to the original 1-based location
    index.  ``k_star`` holds the cyclic index alpha for each k; ``a_k`` the
    search bound that caps the n_k search.
    """

    f: Fraction
    c: Fraction
    order: tuple[int, ...]
    sorted_g: tuple[Fraction, ...]
    x: tuple[Fraction, ...]
    n_k: tuple[int, ...]
    k_star: tuple[int, ...]
    a_k: tuple[int, ...]
    m_sufficient: int

    @property
    def cycle(self) -> Fraction:
        return self.f - 2 * self.sorted_g[-1]

    def g_at(self, l: int) -> Fraction:
        """Displacement at a 1-based cyclically extended position."""
        return self.sorted_g[(l - 1) % len(self.sorted_g)]


def _sorted_order(s: Scenario) -> tuple[int, ...]:
    # Ties in g broken by original location index.
    return tuple(sorted(range(1, s.n + 1), key=lambda i: (s.g[i - 1], i)))


def _scale_ints(f: Fraction, c: Fraction, g: Sequence[Fraction]):
    """Common-denominator integer rescaling of (f, c, g)."""
    denom = lcm(f.denominator, c.denominator, *(gi.denominator for gi in g))
    return (
        f.numerator * (denom // f.denominator),
        c.numerator * (denom // c.denominator),
        tuple(gi.numerator * (denom // gi.denominator) for gi in g),
    )


def _int_ceil(num: int, den: int) -> int:
    return -(-num // den)


class _IntCore:
    """Exact integer evaluation of the cyclic k*/n_k searches.

    ``g`` must be sorted ascending.  Position arithmetic is 1-based with
    cyclic extension: g_(l) = g_((l-1) mod I + 1).
    """

    def __init__(self, f: int, c: int, g: tuple[int, ...]):
        self.f = f
        self.c = c
        self.g = g
        self.i = len(g)
        self.slack = f - 2 * g[-1]  # f - 2*g_max, the cycle length
        prefix = [0]
        for gi in g:
            prefix.append(prefix[-1] + gi)
        self.prefix = prefix
        self.total = prefix[-1]

    def cum(self, m: int) -> int:
        """Sum of the first m cyclically extended displacements."""
        q, r = divmod(m, self.i)
        return q * self.total + self.prefix[r]

    def g_at(self, l: int) -> int:
        return self.g[(l - 1) % self.i]

    def kstar(self, k: int) -> int:
        """Smallest cyclic alpha > k whose slot the UAV relieved at k can
        reach:  sum_{l=k+1..alpha} x_l >= g_k + c + g_alpha  (exact).

        A_k depends on k* itself, so the search cap uses the g_max variant of
        the same bound; it can only trip on malformed input.
        """
        base = self.g_at(k) + self.c
        bound = _int_ceil((base + self.g[-1]) * self.total, self.slack * self.g[0])
        cap = k + self.i * _int_ceil(bound, self.i)
        cum_k = self.cum(k)
        alpha = k + 1
        while alpha <= cap:
            lhs = self.slack * (self.cum(alpha) - cum_k)
            if lhs >= (base + self.g_at(alpha)) * self.total:
                return alpha
            alpha += 1
        raise KStarSearchError(f"no alpha <= {cap} satisfies the k* condition for k={k}")

    def window(self, k: int, kstar: int) -> int:
        """g_k + c + g_{k*}, the relieved UAV's unavailability window."""
        return self.g_at(k) + self.c + self.g_at(kstar)

    def ak(self, k: int, kstar: int) -> int:
        """Search bound A_k = ceil(window/(f-2g_max) * sum(g)/g_min)."""
        return _int_ceil(self.window(k, kstar) * self.total, self.slack * self.g[0])

    def nk(self, k: int, kstar: int) -> int:
        """Minimum n with sum_{l=k+1..k+n} g_l >= window/(f-2g_max)*sum(g),
        found by binary search over {1..A_k} (the predicate is monotone)."""
        rhs = self.window(k, kstar) * self.total
        cum_k = self.cum(k)
        lo, hi = 1, self.ak(k, kstar)
        while lo < hi:
            mid = (lo + hi) // 2
            if self.slack * (self.cum(k + mid) - cum_k) >= rhs:
                hi = mid
            else:
                lo = mid + 1
        return lo

    def sufficient_fleet(self) -> int:
        best = 0
        for k in range(1, self.i + 1):
            nk = self.nk(k, self.kstar(k))
            if nk > best:
                best = nk
        return self.i + best


@lru_cache(maxsize=1 << 18)
def _sufficient_fleet_ints(f: int, c: int, g_sorted: tuple[int, ...]) -> int:
    return _IntCore(f, c, g_sorted).sufficient_fleet()


def _core_for(s: Scenario) -> tuple[_IntCore, tuple[int, ...]]:
    validate_scenario(s)
    order = _sorted_order(s)
    f_i, c_i, g_i = _scale_ints(s.f, s.c, [s.g[i - 1] for i in order])
    return _IntCore(f_i, c_i, g_i), order


def herr_parameters(s: Scenario) -> HerrParameters:
    """All HeRR quantities for a (sub)scenario, exactly."""
    core, order = _core_for(s)
    sorted_g = tuple(s.g[i - 1] for i in order)
    slack = s.f - 2 * sorted_g[-1]
    total = sum(sorted_g, Fraction(0))
    x = tuple(slack / total * gj for gj in sorted_g)
    k_star, a_k, n_k = [], [], []
    for k in range(1, s.n + 1):
        ks = core.kstar(k)
        k_star.append(ks)
        a_k.append(core.ak(k, ks))
        n_k.append(core.nk(k, ks))
    return HerrParameters(
        f=s.f,
        c=s.c,
        order=order,
        sorted_g=sorted_g,
        x=x,
        n_k=tuple(n_k),
        k_star=tuple(k_star),
        a_k=tuple(a_k),
        m_sufficient=s.n + max(n_k),
    )


def herr_intervals(s: Scenario) -> tuple[Fraction, ...]:
    """Replacement intervals x_j in sorted order; they sum to f - 2*g_max."""
    core, order = _core_for(s)
    sorted_g = [s.g[i - 1] for i in order]
    slack = s.f - 2 * sorted_g[-1]
    total = sum(sorted_g, Fraction(0))
    return tuple(slack / total * gj for gj in sorted_g)


def herr_kstar(params: HerrParameters, k: int) -> tuple[int, Fraction]:
    """Cyclic index alpha of the first slot reachable after recharging from
    slot k, and the displacement of that slot's location."""
    if not 1 <= k <= len(params.sorted_g):
        raise ScenarioError(f"k={k} out of range 1..{len(params.sorted_g)}")
    f_i, c_i, g_i = _scale_ints(params.f, params.c, params.sorted_g)
    alpha = _IntCore(f_i, c_i, g_i).kstar(k)
    return alpha, params.g_at(alpha)


def herr_nk(params: HerrParameters, k: int) -> int:
    """Backups that must be on hand while the UAV relieved at slot k is away."""
    if not 1 <= k <= len(params.sorted_g):
        raise ScenarioError(f"k={k} out of range 1..{len(params.sorted_g)}")
    f_i, c_i, g_i = _scale_ints(params.f, params.c, params.sorted_g)
    core = _IntCore(f_i, c_i, g_i)
    return core.nk(k, core.kstar(k))


def herr_sufficient_fleet(s: Scenario) -> int:
    """Fleet size guaranteed sufficient for the rotation: I + max_k n_k.

    This is an upper bound on what the schedule actually uses, not a minimum;
    the event simulation sometimes gets by with fewer UAVs.
    """
    core, _ = _core_for(s)
    return _sufficient_fleet_ints(core.f, core.c, core.g)


def _dispatches(
    order: tuple[int, ...], sorted_g: tuple[Fraction, ...], x: tuple[Fraction, ...], cycle: Fraction
) -> Iterator[tuple[Fraction, int, Fraction]]:
    offsets = []
    acc = Fraction(0)
    for xj in x:
        acc += xj
        offsets.append(acc)
    cycle_no = 0
    while True:
        base = cycle_no * cycle
        for j in range(len(order)):
            yield (base + offsets[j], order[j], sorted_g[j])
        cycle_no += 1


def herr_schedule(s: Scenario, horizon: Fraction) -> Schedule:
    """Event stream of the heterogeneous rotation up to ``horizon``.

    Within each cycle of length f - 2*g_max, the location at sorted position
    j is relieved at cumulative offset x_1 + ... + x_j; the backup takes off
    g_j earlier.  Backups come FIFO from the ready pool and new UAVs enter
    only when the pool has nobody ready, so ``uav_count`` measures what the
    rotation actually consumes.
    """
    params = herr_parameters(s)
    horizon = Fraction(horizon)
    if horizon < 0:
        raise ScenarioError("horizon must be nonnegative")
    initial = [(params.order[j], params.sorted_g[j]) for j in range(s.n)]
    return rotation_schedule(
        initial,
        _dispatches(params.order, params.sorted_g, params.x, params.cycle),
        s.c,
        horizon,
        params.cycle,
    )


def herr_schedule_cycles(s: Scenario, cycles: int) -> Schedule:
    if cycles < 0:
        raise ScenarioError("cycles must be nonnegative")
    params = herr_parameters(s)
    return herr_schedule(s, params.cycle * cycles)


def lower_bound_het(s: Scenario) -> int:
    """Fleet lower bound N + ceil(sum_i (c + 2g_i)/(f - 2g_i)), exactly."""
    validate_scenario(s)
    total = sum(((s.c + 2 * gi) / (s.f - 2 * gi) for gi in s.g), Fraction(0))
    return s.n + ceil_div(total, Fraction(1))


def compare_het_hom(s: Scenario) -> tuple[int, int]:
    """(heterogeneous lower bound, homogeneous optimum at g = Avg(g_i)).

    The first is always >= the second: averaging displacements never makes
    coverage more expensive.
    """
    validate_scenario(s)
    g_avg = sum(s.g, Fraction(0)) / s.n
    if 2 * g_avg >= s.f:
        raise ScenarioError(f"averaged scenario violates 2g < f (avg g={g_avg})")
    m_hom = s.n + ceil_div((s.c + 2 * g_avg) * s.n, s.f - 2 * g_avg)
    return lower_bound_het(s), m_hom


def check_reciprocal_sum_inequality(xs: Sequence[Fraction]) -> bool:
    """sum(x_i) * sum(1/x_i) >= N^2 for positive vectors, checked exactly."""
    if not xs:
        raise ValueError("empty vector")
    if any(x <= 0 for x in xs):
        raise ValueError("all entries must be positive")
    n = len(xs)
    return sum(xs, Fraction(0)) * sum((Fraction(1) / x for x in xs), Fraction(0)) >= n * n


def check_ratio_sum_inequality(xs: Sequence[Fraction], ys: Sequence[Fraction]) -> bool:
    """Exact check of sum(x_i/y_i) >= N * sum(x)/sum(y).

    Guaranteed to hold whenever the pairing is anti-monotone (larger x_i with
    smaller y_i), which covers the covering-cost substitution x = c + 2g_i,
    y = f - 2g_i; for arbitrary pairings it can be false (x=(1,3), y=(1,2)
    is a counterexample), so callers get the truthful boolean.
    """
    if not xs or not ys:
        raise ValueError("empty vector")
    if len(xs) != len(ys):
        raise ValueError(f"length mismatch: {len(xs)} vs {len(ys)}")
    if any(x <= 0 for x in xs) or any(y <= 0 for y in ys):
        raise ValueError("all entries must be positive")
    n = len(xs)
    lhs = sum((x / y for x, y in zip(xs, ys)), Fraction(0))
    return lhs >= n * sum(xs, Fraction(0)) / sum(ys, Fraction(0))
