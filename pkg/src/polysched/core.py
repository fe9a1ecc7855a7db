"""Instance and schedule data model: heat, recurrence, verification, conversions.

Persons are dense integer ids 0..n-1. An edge is a pair (a, b) with a < b.
Growth rates and heats are exact rationals (`fractions.Fraction`); floats are
rejected so that optimality statements like ``h < 160`` are exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

UNBOUNDED = math.inf
"""Heat / recurrence value of a schedule that never meets some edge.

A distinct value rather than an error: a schedule omitting an edge is
representable and diagnosable. Compares correctly against any Fraction.
"""


def as_rational(value) -> Fraction:
    """Convert to an exact Fraction. Rejects floats.

    Accepts ints, Fractions, and strings ("3", "0.25", "7/6"); decimal
    strings are parsed exactly.
    """
    if isinstance(value, bool):
        raise TypeError("boolean is not a rational value")
    if isinstance(value, float):
        raise TypeError(
            "float growth/heat values are rejected; pass an int, Fraction, "
            "or decimal string for exact arithmetic"
        )
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def normalize_edge(a: int, b: int) -> tuple[int, int]:
    if a == b:
        raise ValueError(f"self-loop on person {a}")
    return (a, b) if a < b else (b, a)


def _check_edges(n: int, edges: tuple[tuple[int, int], ...]) -> None:
    seen: set[tuple[int, int]] = set()
    for a, b in edges:
        if not (0 <= a < b < n):
            raise ValueError(f"edge ({a},{b}) out of range for {n} persons")
        if (a, b) in seen:
            raise ValueError(f"duplicate edge ({a},{b}); graph must be simple")
        seen.add((a, b))


@dataclass(frozen=True)
class OpsInstance:
    """Optimisation instance: persons, relationship edges, growth rate per edge."""

    n: int
    edges: tuple[tuple[int, int], ...]
    growth: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(normalize_edge(a, b) for a, b in self.edges))
        object.__setattr__(self, "growth", tuple(as_rational(g) for g in self.growth))
        _check_edges(self.n, self.edges)
        if len(self.growth) != len(self.edges):
            raise ValueError("need exactly one growth rate per edge")
        if any(g <= 0 for g in self.growth):
            raise ValueError("growth rates must be strictly positive")

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def g_min(self) -> Fraction:
        return min(self.growth)

    @property
    def g_max(self) -> Fraction:
        return max(self.growth)

    @property
    def total_growth(self) -> Fraction:
        return sum(self.growth, Fraction(0))

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}


@dataclass(frozen=True)
class DpsInstance:
    """Decision instance: persons, relationship edges, integer frequency per edge."""

    n: int
    edges: tuple[tuple[int, int], ...]
    freq: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(normalize_edge(a, b) for a, b in self.edges))
        object.__setattr__(self, "freq", tuple(self.freq))
        _check_edges(self.n, self.edges)
        if len(self.freq) != len(self.edges):
            raise ValueError("need exactly one frequency per edge")
        if any((not isinstance(f, int)) or isinstance(f, bool) or f < 1 for f in self.freq):
            raise ValueError("frequencies must be integers >= 1")

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def max_freq(self) -> int:
        return max(self.freq)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}


@dataclass(frozen=True)
class PeriodicSchedule:
    """A period T and, for each day 0..T-1, a set of edge indices; cyclic."""

    period: int
    days: tuple[frozenset[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "days", tuple(frozenset(d) for d in self.days))
        if self.period < 1:
            raise ValueError("period must be >= 1")
        if len(self.days) != self.period:
            raise ValueError("need exactly one edge set per day")

    def occurrences(self, e: int) -> list[int]:
        return [t for t, day in enumerate(self.days) if e in day]


@dataclass(frozen=True)
class Violation:
    """First witness of why a schedule does not satisfy a decision instance."""

    kind: str  # "bad-edge-index" | "not-a-matching" | "never-scheduled" | "gap-too-large"
    day: int | None = None
    edge: int | None = None
    detail: str = ""

    def __str__(self):
        where = []
        if self.day is not None:
            where.append(f"day {self.day}")
        if self.edge is not None:
            where.append(f"edge {self.edge}")
        loc = " at " + ", ".join(where) if where else ""
        return f"{self.kind}{loc}: {self.detail}" if self.detail else f"{self.kind}{loc}"


def check_structure(n_edges: int, schedule: PeriodicSchedule) -> Violation | None:
    """Structural validity: every referenced edge index exists."""
    for t, day in enumerate(schedule.days):
        for e in day:
            if not (0 <= e < n_edges):
                return Violation("bad-edge-index", day=t, edge=e)
    return None


def matching_violation(edges, schedule: PeriodicSchedule) -> Violation | None:
    """First day whose edge set is not a matching, if any."""
    for t, day in enumerate(schedule.days):
        used: set[int] = set()
        for e in sorted(day):
            a, b = edges[e]
            if a in used or b in used:
                return Violation("not-a-matching", day=t, edge=e,
                                 detail=f"person conflict on edge {edges[e]}")
            used.add(a)
            used.add(b)
    return None


def recurrence_time(schedule: PeriodicSchedule, e: int):
    """Maximal time between consecutive occurrences of edge e, cyclically.

    Returns UNBOUNDED if e never occurs; 1 if it occurs every day. The max
    gap over the infinite unrolling equals the max cyclic gap over one
    period (wrapping the period boundary).
    """
    occ = schedule.occurrences(e)
    if not occ:
        return UNBOUNDED
    gaps = [occ[i + 1] - occ[i] for i in range(len(occ) - 1)]
    gaps.append(occ[0] + schedule.period - occ[-1])
    return max(gaps)


def heat(instance: OpsInstance, schedule: PeriodicSchedule):
    """max over edges of g(e) * recurrence_time(e); UNBOUNDED if an edge never occurs."""
    bad = check_structure(instance.m, schedule)
    if bad is not None:
        raise ValueError(f"schedule does not match instance: {bad}")
    worst = Fraction(0)
    for e in range(instance.m):
        r = recurrence_time(schedule, e)
        if r is UNBOUNDED:
            return UNBOUNDED
        h = instance.growth[e] * r
        if h > worst:
            worst = h
    return worst


def verify_dps(instance: DpsInstance, schedule: PeriodicSchedule) -> Violation | None:
    """None iff every day is a matching and every edge recurs within f(e) days.

    Cyclic reading: the schedule is judged on its infinite unrolling, so the
    requirement is "e occurs at least once and its max cyclic gap <= f(e)".
    """
    bad = check_structure(instance.m, schedule)
    if bad is not None:
        return bad
    bad = matching_violation(instance.edges, schedule)
    if bad is not None:
        return bad
    for e in range(instance.m):
        r = recurrence_time(schedule, e)
        if r is UNBOUNDED:
            return Violation("never-scheduled", edge=e,
                             detail=f"edge {instance.edges[e]} never occurs")
        if r > instance.freq[e]:
            return Violation("gap-too-large", edge=e,
                             detail=f"edge {instance.edges[e]} recurs every {r} > f={instance.freq[e]}")
    return None


def ops_to_dps(instance: OpsInstance, h) -> DpsInstance:
    """Frequencies f(e) = floor(h / g(e)); any feasible schedule has heat <= h.

    Requires h >= g_max, else some f(e) would be 0.
    """
    h = as_rational(h)
    if h < instance.g_max:
        raise ValueError("heat below max growth rate")
    freqs = tuple(int(h / g) for g in instance.growth)
    return DpsInstance(instance.n, instance.edges, freqs)


def dps_to_ops(instance: DpsInstance) -> OpsInstance:
    """Growth rates g(e) = 1/f(e), exactly."""
    return OpsInstance(instance.n, instance.edges,
                       tuple(Fraction(1, f) for f in instance.freq))


def normalize(instance: OpsInstance, optimal_schedule: PeriodicSchedule) -> OpsInstance:
    """Unit-fraction growth rates g'(e) = 1/r(e); heat of the given schedule becomes exactly 1."""
    growth = []
    for e in range(instance.m):
        r = recurrence_time(optimal_schedule, e)
        if r is UNBOUNDED:
            raise ValueError("schedule has unbounded heat; cannot normalize")
        growth.append(Fraction(1, r))
    return OpsInstance(instance.n, instance.edges, tuple(growth))
