"""The lower-bound ladder, up to the exact fractional optimum.

The tadpole family (a tight triangle with a long light tail) shows why the
matching-indexed LP matters: the simple mass bound G/m can be driven to 0
by growing the tail, while the LP pins the triangle's obstruction at 7/6.
Run: python3 demos/03_lower_bounds.py
"""

import warnings

from polysched import dps_to_ops
from polysched.bounds import (
    bamboo_bound,
    best_bound,
    dual_value,
    growth_proportional_weights,
    poly_density,
    subset_bound,
    poly_density_bound,
    total_growth_bound,
    trivial_bound,
)
from polysched.generators import figure1, tadpole

print("== bounds on the worked instance ==")
inst = figure1()
for fn in (trivial_bound, bamboo_bound, total_growth_bound, poly_density_bound):
    report = fn(inst)
    print(f"  {report.method:12s} {report.value}")
print("(the exact optimum is 160: the bamboo person and the LP both reach it)")

print()
print("== tadpoles: mass bound fades, poly density does not ==")
for k, f in ((1, 3), (3, 3), (6, 6), (9, 9)):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        ops = dps_to_ops(tadpole(k, f))
    mass = total_growth_bound(ops).value
    density = poly_density(ops)
    print(f"  tail k={k} F={f}: G/m = {mass} ~ {float(mass):.3f},"
          f" poly density = {density.value}")

print()
print("== the optimizing dual weights concentrate on the triangle ==")
with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    ops = dps_to_ops(tadpole(3, 3))
result = poly_density(ops)
print("z =", result.dual.z)
print("primal matching weights:", [(sorted(mm), str(y)) for mm, y in result.primal])
print("strong duality, exactly:", result.primal_objective == result.dual_objective)

print()
print("== the mass bound is the LP at growth-proportional weights ==")
z = growth_proportional_weights(ops)
print("dual_value(z = g/G) =", dual_value(ops, z), "= G/m =", total_growth_bound(ops).value)

print()
print("== restricting to the triangle also recovers 7/6 ==")
print(subset_bound(ops, (0, 1, 2), poly_density_bound))
print("best overall:", best_bound(ops))
