import random
from fractions import Fraction

import pytest

from polysched.simplex import solve_max


def test_textbook_lp():
    # max 3x + 5y s.t. x <= 4, 2y <= 12, 3x + 2y <= 18
    sol = solve_max([3, 5], [[1, 0], [0, 2], [3, 2]], [4, 12, 18])
    assert sol.objective == 36
    assert sol.x == [Fraction(2), Fraction(6)]


def test_duals_satisfy_strong_duality():
    sol = solve_max([3, 5], [[1, 0], [0, 2], [3, 2]], [4, 12, 18])
    assert sum(y * b for y, b in zip(sol.duals, [4, 12, 18])) == sol.objective
    assert all(y >= 0 for y in sol.duals)


def test_degenerate_rhs_terminates():
    # b contains zeros: Bland's rule must still terminate
    sol = solve_max([1, 1], [[1, -1], [-1, 1], [1, 1]], [0, 0, 2])
    assert sol.objective == 2


def test_unbounded_detected():
    with pytest.raises(ValueError, match="unbounded"):
        solve_max([1], [[-1]], [1])


def test_negative_rhs_rejected():
    with pytest.raises(ValueError, match="b >= 0"):
        solve_max([1], [[1]], [-1])


def test_random_lps_duality_exact():
    rng = random.Random(13)
    for _ in range(60):
        n = rng.randint(1, 5)
        m = rng.randint(1, 6)
        c = [Fraction(rng.randint(0, 6)) for _ in range(n)]
        rows = [[Fraction(rng.randint(-2, 4)) for _ in range(n)] for _ in range(m)]
        b = [Fraction(rng.randint(0, 8)) for _ in range(m)]
        # keep it bounded: add a box constraint per variable
        for j in range(n):
            rows.append([Fraction(1) if i == j else Fraction(0) for i in range(n)])
            b.append(Fraction(10))
        sol = solve_max(c, rows, b)
        # primal feasibility
        for row, bi in zip(rows, b):
            assert sum(a * x for a, x in zip(row, sol.x)) <= bi
        assert all(x >= 0 for x in sol.x)
        # dual feasibility and exact strong duality
        assert all(y >= 0 for y in sol.duals)
        for j in range(n):
            assert sum(rows[i][j] * sol.duals[i] for i in range(len(rows))) >= c[j]
        assert sum(y * bi for y, bi in zip(sol.duals, b)) == sol.objective
        assert sum(cj * xj for cj, xj in zip(c, sol.x)) == sol.objective
