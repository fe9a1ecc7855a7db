"""Executable reduction from thresholded 3-CNF satisfiability to decision polycules."""

from __future__ import annotations

from ..core import OpsInstance, dps_to_ops
from .build import CompileError, ReductionArtifact, compile_formula
from .cnf import CnfFormula, emit_dimacs, demo_formula, max3sat_oracle, parse_dimacs
from .gadgetcheck import GADGET_KINDS, GadgetVerdict, check_all_gadgets, gadget_local_check
from .synth import (
    ExtractionError,
    SynthesisError,
    SynthesisRefused,
    extract_assignment,
    synthesize_schedule,
)


def gap_instance(formula: CnfFormula) -> OpsInstance:
    """Optimisation polycule with heat <= 1 iff >= k clauses are satisfiable.

    The compiled polycule has top frequency 12, so the infeasible side has
    optimal heat at least 13/12: the inapproximability gap.
    """
    return dps_to_ops(compile_formula(formula).dps)


__all__ = [
    "CnfFormula",
    "CompileError",
    "ExtractionError",
    "GADGET_KINDS",
    "GadgetVerdict",
    "ReductionArtifact",
    "SynthesisError",
    "SynthesisRefused",
    "check_all_gadgets",
    "compile_formula",
    "emit_dimacs",
    "extract_assignment",
    "demo_formula",
    "gadget_local_check",
    "gap_instance",
    "max3sat_oracle",
    "parse_dimacs",
    "synthesize_schedule",
]
