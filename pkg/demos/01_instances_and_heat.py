"""Instances, schedules, heat, and the decision/optimisation conversions.

Run: python3 demos/01_instances_and_heat.py
"""

from fractions import Fraction

from polysched import (
    OpsInstance,
    PeriodicSchedule,
    dps_to_ops,
    heat,
    normalize,
    ops_to_dps,
    recurrence_time,
    verify_dps,
)
from polysched.fileio import emit_instance, emit_schedule
from polysched.generators import figure1, figure1_schedule

print("== the 8-person worked instance ==")
inst = figure1()
sched = figure1_schedule()
print(emit_instance(inst))
print("its bundled period-8 schedule:")
print(emit_schedule(inst, sched))

print("heat =", heat(inst, sched))
for e, (pair, g) in enumerate(zip(inst.edges, inst.growth)):
    r = recurrence_time(sched, e)
    print(f"  edge {pair} growth {g}: recurs every {r} days -> {g * r}")

print()
print("== decision version at heat 160 ==")
dps = ops_to_dps(inst, 160)
print("frequencies:", dps.freq)
print("schedule satisfies them:", verify_dps(dps, sched) is None)

print()
print("== normal form: growth rates become unit fractions, heat becomes 1 ==")
norm = normalize(inst, sched)
print("normalized growths:", sorted(set(norm.growth)))
print("heat of the same schedule:", heat(norm, sched))

print()
print("== a schedule that skips an edge has unbounded heat ==")
toy = OpsInstance(3, ((0, 1), (1, 2)), (Fraction(1), Fraction(1)))
lazy = PeriodicSchedule(2, (frozenset({0}), frozenset()))
print("heat:", heat(toy, lazy))

print()
print("== reciprocal frequencies turn a decision instance into growth rates ==")
from polysched import DpsInstance

two_three = DpsInstance(3, ((0, 1), (1, 2)), (2, 3))
print("f=(2,3) becomes g =", dps_to_ops(two_three).growth)
