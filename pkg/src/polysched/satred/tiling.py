"""Phase-assignment engine over a 36-day cycle.

At a person whose incident inverse frequencies sum to 1, every edge of a
valid 36-day schedule occurs exactly every f days (gaps sum to 36 while
each is at most f), so an edge's schedule is determined by its phase in
0..f-1. Assigning phases subject to per-person disjointness therefore
enumerates exactly the valid local schedules.
"""

from __future__ import annotations

from collections.abc import Iterator

PERIOD = 36

# slot classes: day residues
RED = frozenset(d for d in range(PERIOD) if d % 3 == 0)
BLUE = frozenset(d for d in range(PERIOD) if d % 3 == 1)
GREEN = frozenset(d for d in range(PERIOD) if d % 6 == 2)
PURPLE = frozenset(d for d in range(PERIOD) if d % 6 == 5)
CLASS_DAYS = {"R": RED, "B": BLUE, "G": GREEN, "P": PURPLE}


def occ_mask(freq: int, phase: int) -> int:
    mask = 0
    for d in range(phase, PERIOD, freq):
        mask |= 1 << d
    return mask


def class_phases(freq: int, color: str) -> list[int]:
    """Phases whose occurrence set lies inside the color class."""
    days = CLASS_DAYS[color]
    return [p for p in range(freq)
            if all(d in days for d in range(p, PERIOD, freq))]


def phase_color(freq: int, phase: int) -> str | None:
    """The slot class the phase keeps to, if any."""
    occ = set(range(phase, PERIOD, freq))
    for color, days in CLASS_DAYS.items():
        if occ <= days:
            return color
    return None


def solve(
    variables: list[tuple[object, int, list[int]]],
    endpoints: dict[object, tuple[object, object]],
    base_masks: dict[object, int],
) -> Iterator[dict[object, int]]:
    """Yield phase assignments keeping every endpoint's day set disjoint.

    variables: (key, freq, candidate phases); endpoints maps each key to the
    two person keys whose occupancy the edge joins; base_masks gives the
    already-committed occupancy (not mutated). Most-constrained variables
    are tried first; within a domain, phases in the given order.
    """
    masks = dict(base_masks)
    order = sorted(range(len(variables)), key=lambda i: (len(variables[i][2]), i))
    assignment: dict[object, int] = {}

    def rec(pos: int) -> Iterator[dict[object, int]]:
        if pos == len(order):
            yield dict(assignment)
            return
        key, freq, domain = variables[order[pos]]
        pa, pb = endpoints[key]
        for phase in domain:
            mask = occ_mask(freq, phase)
            if masks.get(pa, 0) & mask or masks.get(pb, 0) & mask:
                continue
            masks[pa] = masks.get(pa, 0) | mask
            masks[pb] = masks.get(pb, 0) | mask
            assignment[key] = phase
            yield from rec(pos + 1)
            del assignment[key]
            masks[pa] &= ~mask
            masks[pb] &= ~mask

    yield from rec(0)


def solve_first(variables, endpoints, base_masks) -> dict[object, int] | None:
    for sol in solve(variables, endpoints, base_masks):
        return sol
    return None
