"""Thresholded 3-CNF satisfiability compiled into a scheduling instance.

The compiled polycule is schedulable iff at least k clauses are
simultaneously satisfiable. A satisfying assignment becomes a period-36
schedule; any valid schedule reads back as an assignment. Every frequency
is 3, 6, 9, or 12, so as an optimisation instance the gap between the two
sides is the factor 13/12. Run: python3 demos/05_sat_reduction.py
"""

import itertools
from fractions import Fraction

from polysched import dps_to_ops, heat, verify_dps
from polysched.satred import (
    SynthesisRefused,
    check_all_gadgets,
    compile_formula,
    extract_assignment,
    demo_formula,
    max3sat_oracle,
    synthesize_schedule,
)

formula = demo_formula()  # (x1 v x2) & (!x1) & (x1 v !x2 v x3) & (!x3), k=3
print("clauses:", formula.clauses, "threshold k =", formula.k)
print("best simultaneously satisfiable:", max3sat_oracle(formula))

print()
print("== compile ==")
artifact = compile_formula(formula)
dps = artifact.dps
print(f"{dps.n} persons, {dps.m} edges, frequencies {sorted(set(dps.freq))}")
kinds = {}
for g in artifact.gadgets:
    kinds[g.kind] = kinds.get(g.kind, 0) + 1
print("gadgets:", dict(sorted(kinds.items())))

print()
print("== schedule synthesis and read-back ==")
for assignment in itertools.product((False, True), repeat=3):
    satisfied = formula.count_satisfied(assignment)
    bits = "".join("1" if b else "0" for b in assignment)
    try:
        schedule = synthesize_schedule(artifact, assignment)
        ok = verify_dps(dps, schedule) is None
        back = extract_assignment(artifact, schedule)
        back_bits = "".join("1" if b else "0" for b in back)
        print(f"  x={bits}: satisfies {satisfied} -> schedule valid={ok},"
              f" extracted {back_bits}")
    except SynthesisRefused:
        print(f"  x={bits}: satisfies {satisfied} < k -> refused")

print()
print("== the inapproximability gap ==")
ops = dps_to_ops(dps)
schedule = synthesize_schedule(artifact, (False, True, False))
print("heat of the synthesized schedule on the growth-rate version:",
      heat(ops, schedule))
print("on the unschedulable side the optimum is at least",
      Fraction(dps.max_freq + 1, dps.max_freq))

print()
print("== the gadget slot characterizations, checked exhaustively ==")
for kind, verdict in check_all_gadgets().items():
    cases = ", ".join(f"{s.name}({s.solutions})" for s in verdict.scenarios)
    print(f"  {kind:9s} {'ok' if verdict.ok else 'FAIL'}: {cases}")
