"""Dense exact-rational simplex for small LPs: max c.x s.t. Ax <= b, x >= 0, b >= 0.

Bland's rule on both the entering and leaving choices, so degenerate pivots
cannot cycle. Returns the primal optimum and the dual values read off the
slack columns; strong duality then holds exactly in rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass
class LpSolution:
    objective: Fraction
    x: list[Fraction]
    duals: list[Fraction]
    pivots: int


def solve_max(c, a_rows, b) -> LpSolution:
    m = len(a_rows)
    n = len(c)
    if any(len(row) != n for row in a_rows):
        raise ValueError("ragged constraint matrix")
    if any(Fraction(v) < 0 for v in b):
        raise ValueError("this solver requires b >= 0 (slack basis start)")

    tableau = []
    for i in range(m):
        row = [Fraction(v) for v in a_rows[i]]
        row += [Fraction(1) if k == i else Fraction(0) for k in range(m)]
        row.append(Fraction(b[i]))
        tableau.append(row)
    basis = [n + i for i in range(m)]
    zrow = [Fraction(v) for v in c] + [Fraction(0)] * (m + 1)

    pivots = 0
    while True:
        enter = None
        for j in range(n + m):
            if zrow[j] > 0:
                enter = j
                break
        if enter is None:
            break
        leave = None
        best_ratio = None
        for i in range(m):
            coef = tableau[i][enter]
            if coef > 0:
                ratio = tableau[i][-1] / coef
                if (best_ratio is None or ratio < best_ratio
                        or (ratio == best_ratio and basis[i] < basis[leave])):
                    best_ratio = ratio
                    leave = i
        if leave is None:
            raise ValueError("LP is unbounded")
        piv = tableau[leave][enter]
        tableau[leave] = [v / piv for v in tableau[leave]]
        prow = tableau[leave]
        for i in range(m):
            if i != leave and tableau[i][enter] != 0:
                f = tableau[i][enter]
                tableau[i] = [v - f * p for v, p in zip(tableau[i], prow)]
        f = zrow[enter]
        zrow = [v - f * p for v, p in zip(zrow, prow)]
        basis[leave] = enter
        pivots += 1

    x = [Fraction(0)] * n
    for i, bi in enumerate(basis):
        if bi < n:
            x[bi] = tableau[i][-1]
    objective = -zrow[-1]
    duals = [-zrow[n + i] for i in range(m)]
    return LpSolution(objective, x, duals, pivots)
