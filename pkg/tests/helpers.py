"""Independent oracles: deliberately naive, structured nothing like the library."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from polysched.core import DpsInstance, OpsInstance, PeriodicSchedule, UNBOUNDED


def heat_by_desire_simulation(instance: OpsInstance, schedule: PeriodicSchedule):
    """Day-by-day desire growth over three periods of the unrolled schedule.

    Desire on edge e grows by g(e) per day and resets on meeting; the heat
    is the supremum of desire immediately before meetings over the infinite
    unrolling, which stabilizes within 3 periods for a periodic schedule
    (computed from the cyclic steady state: start each edge right after a
    meeting in the last full period).
    """
    t_len = schedule.period
    last_seen: dict[int, int] = {}
    for t in range(3 * t_len):
        for e in schedule.days[t % t_len]:
            last_seen[e] = t
    if len(last_seen) < instance.m:
        return UNBOUNDED
    worst = Fraction(0)
    desire = {e: Fraction(0) for e in range(instance.m)}
    # steady state: run enough warmup, then record peaks over one period
    warm = 3 * t_len
    for t in range(warm + t_len):
        today = schedule.days[t % t_len]
        for e in range(instance.m):
            desire[e] += instance.growth[e]
        for e in range(instance.m):
            if e in today:
                if t >= warm:
                    worst = max(worst, desire[e])
                desire[e] = Fraction(0)
        if t >= warm:
            worst = max(worst, max(desire.values()))
    return worst


def max_gap_by_unrolling(schedule: PeriodicSchedule, e: int):
    """Max run of missing days across three unrolled periods (interior gaps)."""
    t_len = schedule.period
    days = [t for t in range(3 * t_len) if e in schedule.days[t % t_len]]
    if not days:
        return UNBOUNDED
    return max(b - a for a, b in zip(days, days[1:]))


def all_matchings(n: int, edges) -> list[frozenset[int]]:
    """Every matching (not only maximal ones), by subset filtering."""
    out = []
    m = len(edges)
    for r in range(m + 1):
        for combo in combinations(range(m), r):
            used = set()
            good = True
            for e in combo:
                a, b = edges[e]
                if a in used or b in used:
                    good = False
                    break
                used.add(a)
                used.add(b)
            if good:
                out.append(frozenset(combo))
    return out


def brute_force_dps_feasible(instance: DpsInstance, max_period: int) -> bool:
    """Search day sequences over ALL matchings for a valid cyclic schedule.

    A state is the per-edge countdown; any repeat of a state along the path
    closes a feasible cycle. Independent of the library's solver: no
    maximal-matching restriction, plain dict recursion.
    """
    matchings = all_matchings(instance.n, instance.edges)
    start = tuple(instance.freq)
    seen_dead: set[tuple[int, ...]] = set()

    def step(state, mm):
        nxt = []
        for e in range(instance.m):
            if e in mm:
                nxt.append(instance.freq[e])
            else:
                if state[e] == 1:
                    return None
                nxt.append(state[e] - 1)
        return tuple(nxt)

    def rec(state, path):
        if state in path:
            return True
        if state in seen_dead or len(path) > max_period + 1:
            return False
        path = path | {state}
        for mm in matchings:
            nxt = step(state, mm)
            if nxt is not None and rec(nxt, path):
                return True
        seen_dead.add(state)
        return False

    return rec(start, frozenset())


def count_satisfied(clauses, assignment) -> int:
    total = 0
    for clause in clauses:
        if any((assignment[abs(l) - 1] if l > 0 else not assignment[abs(l) - 1])
               for l in clause):
            total += 1
    return total


def small_formula_family(min_size: int = 50):
    """Deterministic pool of formulas with n' <= 3, m <= 4, every threshold k."""
    import random

    from polysched.satred import CnfFormula

    rng = random.Random(7)
    lits = [1, -1, 2, -2, 3, -3]
    formulas = []
    for _ in range(24):
        m = rng.randint(1, 4)
        clauses = []
        for _ in range(m):
            size = rng.randint(1, 3)
            clause = tuple(dict.fromkeys(rng.sample(lits, size)))
            clauses.append(clause)
        for k in range(0, m + 1):
            formulas.append(CnfFormula(3, tuple(clauses), k))
    assert len(formulas) >= min_size
    return formulas
