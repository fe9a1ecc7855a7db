"""Exact feasibility and exact optimal heat via the configuration graph.

States are countdown vectors (days left per edge); days pick maximal
matchings containing every countdown-1 edge; any reachable cycle is a valid
periodic schedule. Run: python3 demos/02_exact_solver.py
"""

from polysched import ops_to_dps, verify_dps
from polysched.exact import dps_feasible, ops_optimal_heat
from polysched.fileio import emit_schedule
from polysched.generators import figure1, pentagon, pinwheel_star, triangle_f2

print("== the locally-fine, globally-impossible triangle ==")
tri = triangle_f2()
print("every person could alternate partners, yet:", dps_feasible(tri).status)

print()
print("== single-person scheduling embeds as a star ==")
for m in (4, 6, 12):
    print(f"star (2,3,{m}):", dps_feasible(pinwheel_star(2, 3, m)).status)
print("star (2,4,4):", dps_feasible(pinwheel_star(2, 4, 4)).status)

print()
print("== the pentagon needs a multi-class edge ==")
pent = pentagon()
result = dps_feasible(pent)
print("status:", result.status)
print(emit_schedule(pent, result.schedule))
cd = pent.edge_index()[(2, 3)]
days = result.schedule.occurrences(cd)
print(f"edge C-D (f=2) occurs on days {days} of period {result.schedule.period}:")
print("residues mod 3:", sorted({d % 3 for d in days}), "- more than one class")

print()
print("== exact optimum for the worked instance ==")
inst = figure1()
opt = ops_optimal_heat(inst)
print("optimal heat:", opt.heat)
print("largest infeasible candidate below it:", opt.predecessor)
print("witness verifies:", verify_dps(ops_to_dps(inst, opt.heat), opt.schedule) is None)
print("probes:", {str(h): v for h, v in sorted(opt.probes.items())})
