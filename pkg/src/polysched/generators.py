"""Named instance families.

Person labels for the 8-person worked instance are A..H = 0..7
(Alex, Brady, Charlie, Daisy, Eli, Frankie, Grace, Holly).
"""

from __future__ import annotations

import warnings
from fractions import Fraction

from .core import DpsInstance, OpsInstance, PeriodicSchedule

FIGURE1_PERSONS = "ABCDEFGH"

_FIG1_EDGES = [
    ("A", "B", 40),
    ("B", "C", 80),
    ("C", "D", 16),
    ("D", "E", 20),
    ("E", "F", 40),
    ("F", "A", 40),
    ("F", "G", 40),
    ("A", "D", 80),
    ("D", "G", 16),
    ("E", "H", 80),
]

# Optimal period-8 schedule of the 8-person instance, by person-pair.
_FIG1_SCHEDULE = [
    ["A-D", "B-C", "E-H", "F-G"],
    ["A-B", "C-D", "E-F"],
    ["A-D", "B-C", "E-H"],
    ["A-F", "D-G"],
    ["A-D", "B-C", "E-H", "F-G"],
    ["A-B", "E-F"],
    ["A-D", "B-C", "E-H"],
    ["A-F", "D-E"],
]

_FIG4_EDGES = [
    ("A", "B"), ("B", "C"), ("G", "H"), ("A", "H"), ("C", "E"),
    ("C", "D"), ("F", "H"), ("B", "F"), ("D", "E"),
]


def _pid(label: str) -> int:
    return FIGURE1_PERSONS.index(label)


def figure1() -> OpsInstance:
    """8 persons, 10 weighted edges; optimal heat is 160."""
    edges = []
    growth = []
    for a, b, g in _FIG1_EDGES:
        edges.append((_pid(a), _pid(b)))
        growth.append(Fraction(g))
    return OpsInstance(8, tuple(edges), tuple(growth))


def figure1_schedule() -> PeriodicSchedule:
    """The bundled optimal period-8 schedule for figure1 (heat exactly 160)."""
    inst = figure1()
    idx = inst.edge_index()
    days = []
    for day in _FIG1_SCHEDULE:
        cur = set()
        for token in day:
            a, b = token.split("-")
            p, q = sorted((_pid(a), _pid(b)))
            cur.add(idx[(p, q)])
        days.append(frozenset(cur))
    return PeriodicSchedule(8, tuple(days))


def unweighted_fig4() -> OpsInstance:
    """8 persons, 9 unit-weight edges, max degree 3; 3-edge-colorable."""
    edges = sorted(tuple(sorted((_pid(a), _pid(b)))) for a, b in _FIG4_EDGES)
    return OpsInstance(8, tuple(edges), tuple(Fraction(1) for _ in edges))


def pentagon() -> DpsInstance:
    """5-cycle with frequency 3 on four edges and 2 on edge C-D.

    Feasible, but only by schedules that place C-D in more than one
    3-residue class.
    """
    labels = "ABCDE"
    named = [("A", "B", 3), ("B", "C", 3), ("C", "D", 2), ("D", "E", 3), ("A", "E", 3)]
    edges = []
    freq = []
    for a, b, f in named:
        edges.append(tuple(sorted((labels.index(a), labels.index(b)))))
        freq.append(f)
    return DpsInstance(5, tuple(edges), tuple(freq))


def tadpole(k: int, big_f: int) -> DpsInstance:
    """Triangle with frequencies (2,3,3) plus a k-edge tail of frequency F.

    Infeasible for every k >= 0, F >= 2 (the triangle alone already is),
    yet the total-growth bound G/m of the OPS version tends to 0 as the
    tail grows. Persons: A,B,C = 0,1,2 then tail T1..Tk.
    """
    if k < 0:
        raise ValueError("tadpole tail length k must be >= 0")
    if big_f < 2:
        raise ValueError("tadpole tail frequency F must be >= 2")
    if big_f == 2:
        warnings.warn("tadpole with F=2 is below the drawn F>=3 family; "
                      "the analysis still covers F>=2", stacklevel=2)
    edges = [(0, 1), (1, 2), (0, 2)]
    freq = [2, 3, 3]
    prev = 2
    for i in range(k):
        node = 3 + i
        edges.append((prev, node))
        freq.append(big_f)
        prev = node
    return DpsInstance(3 + k, tuple(edges), tuple(freq))


def pinwheel_star(*freqs: int) -> DpsInstance:
    """Star polycule: centre 0 joined to one leaf per frequency.

    Single-person scheduling with per-task frequencies; (2,3,M) is the
    classic infeasible family for every M.
    """
    if not freqs:
        raise ValueError("need at least one frequency")
    edges = tuple((0, i + 1) for i in range(len(freqs)))
    return DpsInstance(len(freqs) + 1, edges, tuple(freqs))


def triangle_f2() -> DpsInstance:
    """Triangle with all frequencies 2: every local view is feasible, the instance is not."""
    return DpsInstance(3, ((0, 1), (1, 2), (0, 2)), (2, 2, 2))


def generate(family: str, **params):
    """Dispatch by family name; see the individual generators."""
    table = {
        "figure1": figure1,
        "unweighted-fig4": unweighted_fig4,
        "pentagon": pentagon,
        "tadpole": tadpole,
        "pinwheel-star": pinwheel_star,
        "triangle-f2": triangle_f2,
    }
    if family not in table:
        raise ValueError(f"unknown instance family {family!r}; "
                         f"choose from {sorted(table)}")
    if family == "pinwheel-star":
        return pinwheel_star(*params.pop("freqs"))
    return table[family](**params)


def petersen_unit() -> OpsInstance:
    """Petersen graph with unit growth rates (3-regular, chromatic index 4)."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    edges = sorted(tuple(sorted(e)) for e in outer + inner + spokes)
    return OpsInstance(10, tuple(edges), tuple(Fraction(1) for _ in edges))
