"""Coloring round-robin and geometric layering, with their proven ratios.

Run: python3 demos/04_approximation.py
"""

import math
import random
from fractions import Fraction

from polysched import heat
from polysched.bounds import best_bound
from polysched.coloring import color_edges, round_robin_schedule, trivial_vs_ratio_bound
from polysched.exact import ops_optimal_heat
from polysched.generators import figure1, unweighted_fig4
from polysched.layering import decompose, layered_schedule
from polysched.report import random_ops_instance

print("== unit growth rates: coloring is the whole story ==")
fig4 = unweighted_fig4()
coloring = color_edges(fig4.n, fig4.edges)
sched = round_robin_schedule(fig4)
print(f"greedy coloring uses {coloring.n_colors} colors -> heat {heat(fig4, sched)}")
print(f"exact optimum: {ops_optimal_heat(fig4).heat} (a 3-coloring exists)")

print()
print("== widely spread growth rates: bands ==")
inst = figure1()
decomp = decompose(inst, 2)
for i, band in enumerate(decomp.layers):
    print(f"  band {i}: growths {sorted(int(inst.growth[e]) for e in band)}")
result = layered_schedule(inst)
print(f"layered schedule: heat {result.achieved_heat} at L={result.chosen_level},"
      f" period {result.schedule.period}")
print(f"plain coloring schedule: heat {heat(inst, round_robin_schedule(inst))}")
print(f"exact optimum: {ops_optimal_heat(inst).heat}")

print()
print("== measured ratios against guaranteed ones, on random instances ==")
rng = random.Random(1)
print(f"{'instance':12s} {'h*':>6s} {'coloring':>9s} {'layering':>9s} "
      f"{'col-guar':>9s} {'lay-guar':>9s}")
for i in range(8):
    inst = random_ops_instance(rng, max_persons=6, max_edges=8)
    h_star = ops_optimal_heat(inst).heat
    col = heat(inst, round_robin_schedule(inst))
    lay = layered_schedule(inst).achieved_heat
    col_guar = trivial_vs_ratio_bound(inst)
    lay_guar = max(1.0, 3 * math.log2(inst.max_degree + 1))
    print(f"{'rand-' + str(i):12s} {str(h_star):>6s} {str(Fraction(col, h_star)):>9s} "
          f"{str(Fraction(lay, h_star)):>9s} {float(col_guar):>9.2f} {lay_guar:>9.2f}")

print()
print("every lower bound is also certified below the optimum:")
for i in range(3):
    inst = random_ops_instance(rng, max_persons=6, max_edges=8)
    print(f"  best bound {best_bound(inst).value} <= h* {ops_optimal_heat(inst).heat}")
