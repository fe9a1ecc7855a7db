"""Periodic pairwise-meeting scheduling on weighted graphs.

Persons meet at most once per day (each day's meetings form a matching);
either every relationship carries a hard meeting frequency (decision form)
or a growth rate whose largest accumulated value, the heat, is minimized
(optimisation form). The package provides exact solving via the countdown
configuration graph, coloring and layering approximations with proven
ratios, instance-specific lower bounds up to the exact fractional optimum,
and an executable reduction from thresholded 3-CNF satisfiability.
"""

from .core import (
    DpsInstance,
    OpsInstance,
    PeriodicSchedule,
    UNBOUNDED,
    Violation,
    as_rational,
    dps_to_ops,
    heat,
    normalize,
    ops_to_dps,
    recurrence_time,
    verify_dps,
)
from .generators import generate

__all__ = [
    "DpsInstance",
    "OpsInstance",
    "PeriodicSchedule",
    "UNBOUNDED",
    "Violation",
    "as_rational",
    "dps_to_ops",
    "generate",
    "heat",
    "normalize",
    "ops_to_dps",
    "recurrence_time",
    "verify_dps",
]

__version__ = "0.1.0"
