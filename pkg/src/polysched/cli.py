"""Command-line front end.

Exit codes: 0 success/feasible, 1 infeasible, 2 inconclusive or budget
exceeded, 64 usage error, 65 parse error. Configuration is flags only.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bounds as bounds_mod
from .coloring import round_robin_schedule, trivial_vs_ratio_bound
from .core import (
    DpsInstance,
    OpsInstance,
    UNBOUNDED,
    heat,
    verify_dps,
)
from .exact import FEASIBLE, INFEASIBLE, SearchLimits, dps_feasible, ops_optimal_heat
from .fileio import (
    ParseError,
    emit_instance,
    emit_schedule,
    format_rational,
    parse_instance,
    parse_schedule,
)
from .generators import (
    figure1,
    figure1_schedule,
    generate,
)
from .layering import layered_schedule, ratio_guarantee
from .report import format_table, run_suite, seeded_suite
from .satred import (
    CnfFormula,
    SynthesisRefused,
    compile_formula,
    extract_assignment,
    parse_dimacs,
    synthesize_schedule,
)

EX_OK = 0
EX_INFEASIBLE = 1
EX_INCONCLUSIVE = 2
EX_USAGE = 64
EX_PARSE = 65


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EX_USAGE) from exc


def _load_instance(path: str) -> OpsInstance | DpsInstance:
    try:
        return parse_instance(_read(path))
    except ParseError as exc:
        raise CliError(f"{path}: {exc}", EX_PARSE) from exc


def _load_ops(path: str) -> OpsInstance:
    inst = _load_instance(path)
    if not isinstance(inst, OpsInstance):
        raise CliError(f"{path}: expected an ops instance", EX_USAGE)
    return inst


def _load_dps(path: str) -> DpsInstance:
    inst = _load_instance(path)
    if not isinstance(inst, DpsInstance):
        raise CliError(f"{path}: expected a dps instance", EX_USAGE)
    return inst


def _load_schedule(instance, path: str):
    try:
        return parse_schedule(instance, _read(path))
    except ParseError as exc:
        raise CliError(f"{path}: {exc}", EX_PARSE) from exc


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _limits(args) -> SearchLimits:
    return SearchLimits(max_states=args.max_states, time_limit=args.time_limit)


# -- subcommands ---------------------------------------------------------------


def cmd_gen(args) -> int:
    kwargs = {}
    if args.family == "tadpole":
        kwargs = {"k": args.tail, "big_f": args.tail_freq}
    elif args.family == "pinwheel-star":
        if not args.freqs:
            raise CliError("pinwheel-star needs --freqs", EX_USAGE)
        kwargs = {"freqs": tuple(int(x) for x in args.freqs.split(","))}
    instance = generate(args.family, **kwargs)
    _write(args.output, emit_instance(instance))
    if args.family == "figure1" and args.with_schedule:
        _write(args.with_schedule, emit_schedule(figure1(), figure1_schedule()))
    return EX_OK


def cmd_verify(args) -> int:
    instance = _load_instance(args.instance)
    schedule = _load_schedule(instance, args.schedule)
    if isinstance(instance, DpsInstance):
        violation = verify_dps(instance, schedule)
        if violation is None:
            print("ok")
            return EX_OK
        print(f"violation: {violation}")
        return EX_INFEASIBLE
    h = heat(instance, schedule)
    if h is UNBOUNDED:
        print("heat unbounded (some edge never occurs)")
        return EX_INFEASIBLE
    print(f"heat {format_rational(h)}")
    return EX_OK


def cmd_heat(args) -> int:
    instance = _load_ops(args.instance)
    schedule = _load_schedule(instance, args.schedule)
    h = heat(instance, schedule)
    print("unbounded" if h is UNBOUNDED else format_rational(h))
    return EX_OK


def cmd_schedule(args) -> int:
    instance = _load_ops(args.instance)
    if args.algo == "coloring":
        schedule = round_robin_schedule(instance)
        achieved = heat(instance, schedule)
        print(f"heat {format_rational(achieved)}")
        print(f"guarantee {trivial_vs_ratio_bound(instance)}")
    else:
        result = layered_schedule(instance)
        schedule = result.schedule
        achieved = result.achieved_heat
        print(f"heat {format_rational(achieved)}")
        print(f"layers L={result.chosen_level}")
        print(f"guarantee {ratio_guarantee(instance):.3f}")
    best = bounds_mod.best_bound(instance)
    print(f"bound {format_rational(best.value)} ({best.method})")
    if best.value > 0:
        print(f"ratio {format_rational(achieved / best.value)}")
    if args.emit_schedule:
        _write(args.emit_schedule, emit_schedule(instance, schedule))
    return EX_OK


def cmd_feasible(args) -> int:
    instance = _load_dps(args.instance)
    result = dps_feasible(instance, _limits(args), matching_cap=args.matching_cap)
    print(f"{result.status} (explored {result.explored} states)")
    if result.status == FEASIBLE and args.emit_schedule:
        _write(args.emit_schedule, emit_schedule(instance, result.schedule))
    return {FEASIBLE: EX_OK, INFEASIBLE: EX_INFEASIBLE}.get(result.status, EX_INCONCLUSIVE)


def cmd_solve(args) -> int:
    instance = _load_ops(args.instance)
    result = ops_optimal_heat(instance, _limits(args), matching_cap=args.matching_cap)
    if result.status != FEASIBLE:
        lo, hi = result.bracket or (None, None)
        print(f"inconclusive; bracket ({lo}, {hi})")
        return EX_INCONCLUSIVE
    print(f"optimal heat {format_rational(result.heat)}")
    if result.predecessor is not None:
        print(f"infeasible below at {format_rational(result.predecessor)}")
    if args.emit_schedule:
        _write(args.emit_schedule, emit_schedule(instance, result.schedule))
    return EX_OK


def cmd_bound(args) -> int:
    instance = _load_ops(args.instance)
    fn = {
        "trivial": bounds_mod.trivial_bound,
        "bamboo": bounds_mod.bamboo_bound,
        "mass": bounds_mod.total_growth_bound,
        "polydensity": bounds_mod.poly_density_bound,
        "best": bounds_mod.best_bound,
    }[args.method]
    report = fn(instance)
    print(f"{report.method} {format_rational(report.value)}")
    if args.certificate and report.certificate is not None:
        if report.method == "bamboo":
            print(f"certificate person {report.certificate}")
        elif report.method == "polydensity":
            weights = " ".join(format_rational(z) for z in report.certificate.z)
            print(f"certificate z {weights}")
        else:
            print(f"certificate {report.certificate}")
    return EX_OK


def _artifact_from_sidecar(path: str):
    lines = _read(path).splitlines()
    header = [ln for ln in lines if ln.startswith("# cnf ")]
    if not header:
        raise CliError(f"{path}: missing '# cnf' header", EX_PARSE)
    _, _, n_s, m_s, k_s = header[0].split()
    clauses = []
    for ln in lines:
        if ln.startswith("# clause "):
            clauses.append(tuple(int(x) for x in ln.split()[2:]))
    formula = CnfFormula(int(n_s), tuple(clauses), int(k_s))
    if len(clauses) != int(m_s):
        raise CliError(f"{path}: clause count mismatch", EX_PARSE)
    return compile_formula(formula)


def cmd_reduce_sat(args) -> int:
    try:
        formula = parse_dimacs(_read(args.cnf), k=args.k)
    except ValueError as exc:
        raise CliError(f"{args.cnf}: {exc}", EX_PARSE) from exc
    artifact = compile_formula(formula)
    _write(args.output, emit_instance(artifact.dps))
    sidecar = [f"# cnf {formula.num_vars} {formula.num_clauses} {formula.k}"]
    sidecar += [f"# clause {' '.join(str(l) for l in c)}" for c in formula.clauses]
    sidecar += artifact.provenance_lines()
    _write(args.output + ".prov", "\n".join(sidecar) + "\n")
    print(f"compiled: {artifact.dps.n} persons, {artifact.dps.m} edges, "
          f"max frequency {artifact.dps.max_freq}")
    return EX_OK


def cmd_synth(args) -> int:
    artifact = _artifact_from_sidecar(args.artifact + ".prov")
    bits = args.assign.strip()
    if len(bits) != artifact.formula.num_vars or set(bits) - {"0", "1"}:
        raise CliError("--assign must be a 0/1 string, one bit per variable", EX_USAGE)
    assignment = tuple(c == "1" for c in bits)
    try:
        schedule = synthesize_schedule(artifact, assignment)
    except SynthesisRefused as exc:
        print(f"refused: {exc}")
        return EX_INFEASIBLE
    _write(args.output, emit_schedule(artifact.dps, schedule))
    return EX_OK


def cmd_extract(args) -> int:
    artifact = _artifact_from_sidecar(args.artifact + ".prov")
    schedule = _load_schedule(artifact.dps, args.schedule)
    values = extract_assignment(artifact, schedule)
    print("".join("1" if v else "0" for v in values))
    return EX_OK


def cmd_suite(args) -> int:
    instances: list[tuple[str, OpsInstance]] = []
    if args.fixtures:
        instances.append(("figure1", figure1()))
        instances.append(("fig4", generate("unweighted-fig4")))
    instances += seeded_suite(args.seed, args.count,
                              max_persons=args.max_persons, max_edges=args.max_edges)
    algos = args.algos.split(",")
    reports = run_suite(instances, algos, bound_methods=args.bound.split(","))
    sys.stdout.write(format_table(reports, fmt=args.format, with_time=args.times))
    return EX_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polysched",
        description="periodic pairwise-meeting scheduling: solvers, bounds, reductions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit a named instance family")
    p.add_argument("family", choices=["figure1", "unweighted-fig4", "pentagon",
                                      "tadpole", "pinwheel-star", "triangle-f2"])
    p.add_argument("--tail", type=int, default=3, help="tadpole tail length")
    p.add_argument("--tail-freq", type=int, default=3, help="tadpole tail frequency")
    p.add_argument("--freqs", help="pinwheel-star frequencies, comma separated")
    p.add_argument("-o", "--output", default="-")
    p.add_argument("--with-schedule", help="also write the bundled figure1 schedule")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="check a schedule against an instance")
    p.add_argument("instance")
    p.add_argument("schedule")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("heat", help="heat of a schedule on an ops instance")
    p.add_argument("instance")
    p.add_argument("schedule")
    p.set_defaults(func=cmd_heat)

    p = sub.add_parser("schedule", help="build an approximation schedule")
    p.add_argument("--algo", choices=["coloring", "layering"], required=True)
    p.add_argument("instance")
    p.add_argument("--emit-schedule")
    p.set_defaults(func=cmd_schedule)

    for name, fn in (("feasible", cmd_feasible), ("solve", cmd_solve)):
        p = sub.add_parser(name, help=f"exact {name} via the configuration graph")
        p.add_argument("instance")
        p.add_argument("--emit-schedule")
        p.add_argument("--max-states", type=int, default=50_000_000)
        p.add_argument("--time-limit", type=float, default=None)
        p.add_argument("--matching-cap", type=int, default=24)
        if name == "solve":
            p.add_argument("--exact", action="store_true",
                           help="accepted for symmetry; the solver is always exact")
        p.set_defaults(func=fn)

    p = sub.add_parser("bound", help="instance-specific lower bounds")
    p.add_argument("--method", choices=["trivial", "bamboo", "mass", "polydensity", "best"],
                   default="best")
    p.add_argument("--certificate", action="store_true")
    p.add_argument("instance")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("reduce-sat", help="compile a DIMACS CNF into a dps instance")
    p.add_argument("--cnf", required=True)
    p.add_argument("-k", type=int, default=None, help="required satisfied clauses")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_reduce_sat)

    p = sub.add_parser("synth", help="schedule a compiled instance from an assignment")
    p.add_argument("--artifact", required=True, help="instance file (with .prov sidecar)")
    p.add_argument("--assign", required=True, help="0/1 string, one bit per variable")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("extract", help="read the variable assignment out of a schedule")
    p.add_argument("--artifact", required=True)
    p.add_argument("--schedule", required=True)
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("suite", help="run algorithms x bounds over a seeded suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--max-persons", type=int, default=7)
    p.add_argument("--max-edges", type=int, default=10)
    p.add_argument("--algos", default="coloring,layering")
    p.add_argument("--bound", default="best",
                   help="bound method(s), comma separated: one table row each")
    p.add_argument("--fixtures", action="store_true", help="include figure1 and fig4")
    p.add_argument("--format", choices=["text", "csv"], default="text")
    p.add_argument("--times", action="store_true", help="append wall-time column")
    p.set_defaults(func=cmd_suite)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EX_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_USAGE


if __name__ == "__main__":
    sys.exit(main())
