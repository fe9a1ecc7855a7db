"""Acceptance suite: every criterion at its stated tolerance, one line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the PASS lines.
All equalities on heats, bounds, and densities are exact rational
comparisons; nothing is checked within a float tolerance.
"""

import itertools
import math
import random
import warnings
from fractions import Fraction

import pytest
from helpers import small_formula_family

from polysched.bounds import (
    bamboo_bound,
    poly_density,
    poly_density_bound,
    total_growth_bound,
    trivial_bound,
)
from polysched.coloring import chromatic_index, round_robin_schedule, trivial_vs_ratio_bound
from polysched.core import OpsInstance, dps_to_ops, heat, ops_to_dps, verify_dps
from polysched.exact import FEASIBLE, INFEASIBLE, dps_feasible, ops_optimal_heat
from polysched.generators import (
    figure1,
    figure1_schedule,
    pentagon,
    petersen_unit,
    pinwheel_star,
    tadpole,
    triangle_f2,
)
from polysched.layering import layered_schedule
from polysched.report import seeded_suite
from polysched.satred import (
    SynthesisRefused,
    check_all_gadgets,
    compile_formula,
    extract_assignment,
    max3sat_oracle,
    synthesize_schedule,
)
from polysched.satred.build import density_one_persons


def announce(number: int, text: str) -> None:
    print(f"\nACCEPTANCE {number}: PASS - {text}")


@pytest.fixture(scope="module")
def reduction_suite():
    """Compiled artifacts for the exhaustive small-formula family (shared by 7 and 9)."""
    formulas = small_formula_family()
    return [(f, compile_formula(f)) for f in formulas]


def test_criterion_1_figure1_reproduction():
    inst = figure1()
    sched = figure1_schedule()
    assert heat(inst, sched) == Fraction(160)
    assert verify_dps(ops_to_dps(inst, 160), sched) is None
    result = ops_optimal_heat(inst)
    assert result.status == FEASIBLE
    assert result.heat == Fraction(160)
    assert verify_dps(ops_to_dps(inst, 160), result.schedule) is None
    assert result.predecessor == Fraction(144)
    assert result.probes[Fraction(144)] == INFEASIBLE
    announce(1, "figure-1 heat exactly 160; exact optimum 160 with witness; "
                "predecessor candidate 144 certified infeasible")


def test_criterion_2_small_infeasible_families():
    assert dps_feasible(triangle_f2()).status == INFEASIBLE
    for m in range(4, 13):
        assert dps_feasible(pinwheel_star(2, 3, m)).status == INFEASIBLE
    assert dps_feasible(pinwheel_star(2, 4, 4)).status == FEASIBLE
    announce(2, "triangle f=2 and stars (2,3,4..12) infeasible; star (2,4,4) feasible")


def test_criterion_3_pentagon_multicolor():
    pent = pentagon()
    result = dps_feasible(pent)
    assert result.status == FEASIBLE
    assert verify_dps(pent, result.schedule) is None
    cd = pent.edge_index()[(2, 3)]
    horizon = math.lcm(result.schedule.period, 3)
    days = [t for t in range(horizon)
            if cd in result.schedule.days[t % result.schedule.period]]
    residues = {d % 3 for d in days}
    assert len(residues) >= 2
    announce(3, f"pentagon feasible; C-D occupies {len(residues)} residue classes mod 3")


def test_criterion_4_tadpole_poly_density():
    for k in (1, 2, 3):
        for f in (2, 3, 4):
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                ops = dps_to_ops(tadpole(k, f))
            result = poly_density(ops)
            assert result.value == Fraction(7, 6)
            assert result.primal_objective == result.dual_objective  # strong duality
            mass = total_growth_bound(ops)
            expect = (Fraction(7, 6) + Fraction(k, f)) / (1 + (k + 1) // 2)
            assert mass.value == expect
    announce(4, "poly density exactly 7/6 and G/m exact on the (k,F) grid; "
                "primal = dual objective exactly")


def test_criterion_5_bounds_and_ratios_on_random_suite():
    suite = seeded_suite(2024, 200)
    assert len(suite) >= 200
    violations = 0
    for name, inst in suite:
        assert inst.m <= 10
        result = ops_optimal_heat(inst)
        assert result.status == FEASIBLE, name
        h_star = result.heat
        for fn in (trivial_bound, bamboo_bound, total_growth_bound, poly_density_bound):
            if fn(inst).value > h_star:
                violations += 1
        col = heat(inst, round_robin_schedule(inst))
        if col / h_star > trivial_vs_ratio_bound(inst):
            violations += 1
        lay = layered_schedule(inst).achieved_heat
        if lay / h_star > max(1, 3 * math.log2(inst.max_degree + 1)):
            violations += 1
    assert violations == 0
    announce(5, "200 seeded instances: every bound <= h*, coloring and layering "
                "ratios within their guarantees, zero violations")


def test_criterion_6_unweighted_bridge():
    rng = random.Random(606)
    graphs = [("petersen", petersen_unit()),
              ("c5", OpsInstance(5, tuple((i, (i + 1) % 5) for i in range(5)), (1,) * 5))]
    while len(graphs) < 20:
        n = rng.randint(3, 8)
        pool = [(a, b) for a in range(n) for b in range(a + 1, n)]
        m = rng.randint(2, min(len(pool), 16))
        edges = tuple(sorted(rng.sample(pool, m)))
        graphs.append((f"g{len(graphs)}", OpsInstance(n, edges, (1,) * m)))
    saw_class_two = 0
    for name, inst in graphs:
        chi = chromatic_index(inst.n, inst.edges)
        result = ops_optimal_heat(inst)
        assert result.status == FEASIBLE, name
        assert result.heat == chi, name
        if chi == inst.max_degree + 1:
            saw_class_two += 1
    assert saw_class_two >= 1
    announce(6, f"20 unweighted graphs: exact optimum equals the backtracking "
                f"chromatic index, {saw_class_two} of them at Delta+1")


def test_criterion_7_reduction_structural_suite(reduction_suite):
    assert len(reduction_suite) >= 50
    for formula, art in reduction_suite:
        assert set(art.dps.freq) <= {3, 6, 9, 12}
        assert art.dps.max_freq == 12
        load = [Fraction(0)] * art.dps.n
        for (a, b), f in zip(art.dps.edges, art.dps.freq):
            load[a] += Fraction(1, f)
            load[b] += Fraction(1, f)
        assert all(load[p] == 1 for p in density_one_persons(art))
        oracle = max3sat_oracle(formula)
        for bits in itertools.product((False, True), repeat=formula.num_vars):
            if formula.count_satisfied(bits) >= formula.k:
                schedule = synthesize_schedule(art, bits)
                assert verify_dps(art.dps, schedule) is None
                back = extract_assignment(art, schedule)
                assert formula.count_satisfied(back) >= formula.k
            else:
                with pytest.raises(SynthesisRefused):
                    synthesize_schedule(art, bits)
        if oracle < formula.k:
            for bits in itertools.product((False, True), repeat=formula.num_vars):
                with pytest.raises(SynthesisRefused):
                    synthesize_schedule(art, bits)
    announce(7, f"{len(reduction_suite)} formulas: frequencies in {{3,6,9,12}} with "
                "top 12, density-1 persons exact, synthesis verifies and round-trips, "
                "refusal below threshold")


def test_criterion_8_gadget_characterizations():
    verdicts = check_all_gadgets()
    assert len(verdicts) == 12
    for kind, verdict in verdicts.items():
        assert verdict.ok, f"{kind}: " + "; ".join(
            f"{s.name}: {s.detail}" for s in verdict.scenarios if not s.ok)
        assert all(s.solutions > 0 for s in verdict.scenarios)
    announce(8, "all 12 gadget kinds match their slot characterizations exhaustively")


def test_criterion_9_gap_instances(reduction_suite):
    checked = 0
    for formula, art in reduction_suite:
        assert Fraction(art.dps.max_freq + 1, art.dps.max_freq) == Fraction(13, 12)
        oracle = max3sat_oracle(formula)
        if oracle < formula.k:
            continue
        ops = dps_to_ops(art.dps)
        for bits in itertools.product((False, True), repeat=formula.num_vars):
            if formula.count_satisfied(bits) >= formula.k:
                schedule = synthesize_schedule(art, bits)
                assert heat(ops, schedule) <= 1
                checked += 1
                break
    assert checked > 0
    announce(9, f"{checked} gap instances: synthesized schedules reach heat <= 1 "
                "exactly; top frequency 12 gives the 13/12 gap factor")
