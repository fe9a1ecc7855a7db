import math
import random
from fractions import Fraction

from helpers import brute_force_dps_feasible

from polysched.core import DpsInstance, OpsInstance, ops_to_dps, verify_dps
from polysched.exact import (
    FEASIBLE,
    INCONCLUSIVE,
    INFEASIBLE,
    SearchLimits,
    dps_feasible,
    heat_candidates,
    ops_optimal_heat,
    start_state,
    successors,
)
from polysched.generators import (
    figure1,
    pentagon,
    pinwheel_star,
    triangle_f2,
)


def random_dps(rng, max_n=5, max_m=5, max_f=4):
    n = rng.randint(2, max_n)
    pool = [(a, b) for a in range(n) for b in range(a + 1, n)]
    m = rng.randint(1, min(len(pool), max_m))
    edges = tuple(sorted(rng.sample(pool, m)))
    freq = tuple(rng.randint(1, max_f) for _ in edges)
    return DpsInstance(n, edges, freq)


class TestSuccessors:
    def test_triangle_all_urgent_deadlock(self):
        tri = triangle_f2()
        assert successors((1, 1, 1), tri) == []

    def test_single_edge_resets(self):
        inst = DpsInstance(2, ((0, 1),), (3,))
        succ = successors((3,), inst)
        assert succ == [(frozenset({0}), (3,))]

    def test_path_with_urgent_edge(self):
        inst = DpsInstance(3, ((0, 1), (1, 2)), (1, 2))
        succ = successors((1, 2), inst)
        # the only maximal matchings are {0} and {1}; edge 0 is forced
        assert [mm for mm, _ in succ] == [frozenset({0})]
        assert succ[0][1] == (1, 1)

    def test_urgency_relief_ordering(self):
        inst = DpsInstance(4, ((0, 1), (2, 3)), (3, 3))
        succ = successors((2, 3), inst)
        # the lone maximal matching covers both
        assert succ[0][0] == frozenset({0, 1})


class TestFeasibility:
    def test_triangle_infeasible(self):
        assert dps_feasible(triangle_f2()).status == INFEASIBLE

    def test_pinwheel_stars(self):
        for m in range(4, 13):
            assert dps_feasible(pinwheel_star(2, 3, m)).status == INFEASIBLE
        assert dps_feasible(pinwheel_star(2, 4, 4)).status == FEASIBLE

    def test_pentagon_feasible_multiclass_cd(self):
        pent = pentagon()
        result = dps_feasible(pent)
        assert result.status == FEASIBLE
        assert verify_dps(pent, result.schedule) is None
        cd = pent.edge_index()[(2, 3)]
        horizon = math.lcm(result.schedule.period, 3)
        days = [t for t in range(horizon)
                if cd in result.schedule.days[t % result.schedule.period]]
        assert len({d % 3 for d in days}) >= 2

    def test_witness_always_verifies(self):
        rng = random.Random(53)
        for _ in range(150):
            inst = random_dps(rng)
            result = dps_feasible(inst)
            if result.status == FEASIBLE:
                assert verify_dps(inst, result.schedule) is None

    def test_infeasible_cross_checked_by_brute_force(self):
        # brute force searches sequences over ALL matchings, so this also
        # confirms that restricting to maximal matchings loses nothing
        rng = random.Random(59)
        checked_infeasible = 0
        for _ in range(80):
            inst = random_dps(rng, max_n=4, max_m=4, max_f=3)
            lcm = math.lcm(*inst.freq)
            mine = dps_feasible(inst).status == FEASIBLE
            brute = brute_force_dps_feasible(inst, max_period=math.prod(inst.freq) + 1)
            assert mine == brute, (inst, lcm)
            if not mine:
                checked_infeasible += 1
        assert checked_infeasible >= 5

    def test_state_count_within_product_bound(self):
        rng = random.Random(61)
        for _ in range(50):
            inst = random_dps(rng)
            result = dps_feasible(inst)
            assert result.explored <= math.prod(inst.freq) + 1

    def test_budget_inconclusive(self):
        inst = ops_to_dps(figure1(), 160)
        limited = dps_feasible(inst, SearchLimits(max_states=3))
        assert limited.status == INCONCLUSIVE

    def test_dominance_does_not_change_verdicts(self):
        rng = random.Random(67)
        for _ in range(60):
            inst = random_dps(rng)
            on = dps_feasible(inst, SearchLimits(dominance=True)).status
            off = dps_feasible(inst, SearchLimits(dominance=False)).status
            assert on == off

    def test_dominance_soundness_on_exhaustive_state_space(self):
        # alive = greatest fixpoint of "has a successor that is alive";
        # alive must be upward closed, dead downward closed, componentwise
        rng = random.Random(73)
        for _ in range(25):
            inst = random_dps(rng, max_n=4, max_m=3, max_f=3)
            from itertools import product as iproduct
            states = list(iproduct(*(range(1, f + 1) for f in inst.freq)))
            alive = set(states)
            changed = True
            while changed:
                changed = False
                for s in list(alive):
                    if not any(nxt in alive for _, nxt in successors(s, inst)):
                        alive.discard(s)
                        changed = True
            for s in states:
                for t in states:
                    if all(a >= b for a, b in zip(t, s)):
                        if s in alive:
                            assert t in alive  # more slack stays alive
                        if t not in alive:
                            assert s not in alive
            # the solver's verdict matches reachability into the alive set
            verdict = dps_feasible(inst).status
            assert (verdict == FEASIBLE) == (tuple(inst.freq) in alive)

    def test_start_state_is_all_f(self):
        assert start_state(triangle_f2()) == (2, 2, 2)


class TestOptimalHeat:
    def test_figure1(self):
        result = ops_optimal_heat(figure1())
        assert result.status == FEASIBLE
        assert result.heat == 160
        assert result.predecessor == 144
        assert result.probes[Fraction(144)] == INFEASIBLE
        assert verify_dps(ops_to_dps(figure1(), 160), result.schedule) is None

    def test_single_edge(self):
        inst = OpsInstance(2, ((0, 1),), (Fraction(7),))
        result = ops_optimal_heat(inst)
        assert result.heat == 7

    def test_unit_triangle(self):
        inst = OpsInstance(3, ((0, 1), (0, 2), (1, 2)), (1, 1, 1))
        assert ops_optimal_heat(inst).heat == 3

    def test_candidates_contain_optimum(self):
        inst = figure1()
        cands = heat_candidates(inst)
        assert Fraction(160) in cands
        assert all(c >= inst.g_max for c in cands)

    def test_probe_monotonicity(self):
        result = ops_optimal_heat(figure1())
        feas = sorted(h for h, v in result.probes.items() if v == FEASIBLE)
        infeas = sorted(h for h, v in result.probes.items() if v == INFEASIBLE)
        assert not infeas or not feas or max(infeas) < min(feas)

    def test_matches_brute_force_heat_on_tiny_instances(self):
        rng = random.Random(71)
        for _ in range(25):
            n = rng.randint(2, 4)
            pool = [(a, b) for a in range(n) for b in range(a + 1, n)]
            m = rng.randint(1, min(len(pool), 3))
            edges = tuple(sorted(rng.sample(pool, m)))
            growth = tuple(Fraction(rng.randint(1, 4)) for _ in edges)
            inst = OpsInstance(n, edges, growth)
            result = ops_optimal_heat(inst)
            # independent check: h* is the least candidate whose floor
            # frequencies admit a brute-force schedule
            for h in heat_candidates(inst):
                dps = ops_to_dps(inst, h)
                ok = brute_force_dps_feasible(dps, max_period=math.prod(dps.freq) + 1)
                if ok:
                    assert result.heat == h
                    break
