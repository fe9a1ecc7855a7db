"""Schedule synthesis from a satisfying assignment, and assignment extraction.

Synthesis builds a period-36 schedule (the lcm of the gadget periods 6, 12,
18). Edge phases come in three groups: constants and 3-day value edges are
forced outright; channel edges follow a per-channel phase discipline (blue
phase [1,4,7,10] by channel mod 4, green [2,8] by channel mod 2) matching
the compile-time splitter allocation; everything else is settled by small
per-gadget tiling solves in construction order.
"""

from __future__ import annotations

from ..core import PeriodicSchedule, verify_dps
from .build import (
    GadgetRec,
    ReductionArtifact,
    channel_blue_phase,
    channel_green_phase,
)
from .tiling import PERIOD, class_phases, occ_mask, solve_first


class SynthesisRefused(ValueError):
    """The assignment does not satisfy the required number of clauses."""


class SynthesisError(RuntimeError):
    """Internal failure: a gadget admitted no consistent local schedule."""


def _check_assignment(artifact: ReductionArtifact, assignment) -> list[int]:
    formula = artifact.formula
    if len(assignment) != formula.num_vars:
        raise ValueError("assignment length must equal the variable count")
    satisfied = [
        j for j, clause in enumerate(formula.clauses)
        if any(assignment[abs(lit) - 1] == (lit > 0) for lit in clause)
    ]
    if len(satisfied) < formula.k:
        raise SynthesisRefused(
            f"assignment satisfies {len(satisfied)} < k={formula.k} clauses"
        )
    return satisfied


def simulate_channels(artifact: ReductionArtifact, assignment) -> dict[int, str]:
    """Color (B/G) of every channel-carrying edge under the canonical synthesis.

    The lexicographically first k satisfied clauses go blue; comparators act
    as boolean or/and on blue, so blues bubble to the left channels.
    """
    formula = artifact.formula
    satisfied = _check_assignment(artifact, assignment)
    chosen = set(satisfied[: formula.k])
    colors: dict[int, str] = {}
    channel_state: list[tuple[GadgetRec, str, str]] = []
    for j, gid in enumerate(artifact.clause_out):
        g = artifact.gadget(gid)
        channel_state.append((g, "out", "B" if j in chosen else "G"))

    def land(g: GadgetRec, port_name: str, color: str) -> None:
        # the port's edge was recorded on the producer gadget under port_name
        colors[g.edges[port_name]] = color

    for pair_c, gid in artifact.comparators:
        swap = artifact.gadget(gid)
        g1, n1, c1 = channel_state[pair_c - 1]
        g2, n2, c2 = channel_state[pair_c]
        land(g1, n1, c1)
        land(g2, n2, c2)
        out_or = "B" if "B" in (c1, c2) else "G"
        out_and = "B" if (c1, c2) == ("B", "B") else "G"
        channel_state[pair_c - 1] = (swap, "out_or", out_or)
        channel_state[pair_c] = (swap, "out_and", out_and)
    for j, (g, name, color) in enumerate(channel_state):
        land(g, name, color)
        if j < formula.k and color != "B":
            raise SynthesisError("a tensioned channel came out green")
    return colors


def synthesize_schedule(artifact: ReductionArtifact, assignment) -> PeriodicSchedule:
    """Valid period-36 schedule; refuses if fewer than k clauses are satisfied."""
    formula = artifact.formula
    _check_assignment(artifact, assignment)
    channel_colors = simulate_channels(artifact, assignment)
    dps = artifact.dps
    phases: dict[int, int] = {}
    masks: dict[int, int] = {}

    def assign(e: int, phase: int) -> None:
        a, b = dps.edges[e]
        mask = occ_mask(dps.freq[e], phase)
        if masks.get(a, 0) & mask or masks.get(b, 0) & mask:
            raise SynthesisError(
                f"phase clash at edge {e} ({artifact.edge_recs[e].role})"
            )
        masks[a] = masks.get(a, 0) | mask
        masks[b] = masks.get(b, 0) | mask
        phases[e] = phase

    value_class: dict[int, int] = {}  # variable -> 0 if x_i red(True) else 1
    padded = max(2, (artifact.formula.num_vars + 1) // 2 * 2)
    for i in range(1, padded + 1):
        if i <= formula.num_vars:
            value_class[i] = 0 if assignment[i - 1] else 1
        else:
            value_class[i] = 0  # padding variables: arbitrary, fixed True

    # pass 1: every edge whose phase is forced
    for rec in artifact.edge_recs:
        e = rec.index
        freq = rec.freq
        if rec.color == "R" and freq == 3:
            assign(e, 0)
        elif rec.color == "B" and freq == 3:
            assign(e, 1)
        elif rec.color == "G" and freq == 6:
            assign(e, 2)
        elif rec.color == "P" and freq == 6:
            assign(e, 5)
        elif rec.color in ("B", "G") and freq == 12 and rec.role in (
            "const-B12", "const-G12", "surplus-B12", "surplus-G12",
        ):
            src = artifact.gadget(rec.src[0])
            assign(e, src.meta["port_phase"][rec.src[1]] % 12)
        elif rec.role == "value":
            var, pol = _value_edge_literal(artifact, rec)
            red = (value_class[var] == 0) == (pol > 0)
            assign(e, 0 if red else 1)
        elif rec.role == "value-spare":
            var, pol = _value_edge_literal(artifact, rec)
            red = (value_class[var] == 0) == (pol > 0)
            assign(e, 0 if red else 1)
        elif e in channel_colors:
            c = artifact.channel_of_edge[e]
            color = channel_colors[e]
            assign(e, channel_blue_phase(c) if color == "B" else channel_green_phase(c))

    # pass 2: per-gadget local solves in construction order, except that
    # splitters and pendants settle last: the consumer of a flexible port
    # chooses its phase, the producer then takes what remains
    deferred = ("SB6", "SB12", "SG12", "Pendant")
    solve_order = [g for g in artifact.gadgets if g.kind not in deferred]
    solve_order += [g for g in artifact.gadgets if g.kind in deferred]
    for g in solve_order:
        free = []
        endpoints = {}
        seen = set()
        for name, e in g.edges.items():
            if e in phases or e in seen:
                continue
            seen.add(e)
            rec = artifact.edge_recs[e]
            domain = _free_domain(artifact, rec, channel_colors, value_class)
            free.append((e, rec.freq, domain))
            endpoints[e] = (rec.a, rec.b)
        if not free:
            continue
        sol = solve_first(free, endpoints, masks)
        if sol is None:
            raise SynthesisError(f"no local schedule for {g.name}")
        for e, phase in sol.items():
            assign(e, phase)

    missing = [e for e in range(dps.m) if e not in phases]
    if missing:
        raise SynthesisError(f"unassigned edges {missing[:5]}")

    days = [set() for _ in range(PERIOD)]
    for e, phase in phases.items():
        for d in range(phase, PERIOD, dps.freq[e]):
            days[d].add(e)
    schedule = PeriodicSchedule(PERIOD, tuple(frozenset(d) for d in days))
    violation = verify_dps(dps, schedule)
    if violation is not None:
        raise SynthesisError(f"synthesized schedule invalid: {violation}")
    return schedule


def _value_edge_literal(artifact: ReductionArtifact, rec) -> tuple[int, int]:
    """Which literal a value edge carries, from its source gadget."""
    src = artifact.gadget(rec.src[0])
    if src.kind == "Variable":
        var = src.meta["var"]
        pol = 1 if rec.src[1] == "valR" else -1
        return var, pol
    if src.kind == "D3":
        signal = src.meta["signal"]
        if signal[0] == "lit":
            return signal[1], signal[2]
    dst = artifact.gadget(rec.dst[0])
    if dst.kind == "Variable":
        var = dst.meta["var"]
        pol = 1 if rec.dst[1] == "valR" else -1
        return var, pol
    if dst.kind == "D3":
        signal = dst.meta["signal"]
        if signal[0] == "lit":
            return signal[1], signal[2]
    raise SynthesisError(f"value edge {rec.index} has no literal source")


def _free_domain(artifact, rec, channel_colors, value_class) -> list[int]:
    freq = rec.freq
    if rec.role == "nine":
        src = artifact.gadget(rec.src[0])
        signal = src.meta["signal"] if src.kind == "D3" else None
        if signal is None:
            raise SynthesisError("nine edge outside a duplication chain")
        if signal[0] == "lit":
            var, pol = signal[1], signal[2]
            red_copies = (value_class[var] == 0) == (pol > 0)
            color = "B" if red_copies else "R"  # nines take the opposite class
        else:
            color = "B" if signal[1] == "R3" else "R"
        return class_phases(9, color)
    if rec.role == "stub-spare" and freq == 9:
        src = artifact.gadget(rec.src[0])
        signal = src.meta["signal"]
        if signal[0] == "lit":
            var, pol = signal[1], signal[2]
            red_copies = (value_class[var] == 0) == (pol > 0)
            color = "B" if red_copies else "R"
        else:
            color = "B" if signal[1] == "R3" else "R"
        return class_phases(9, color)
    if rec.color is not None:
        return class_phases(freq, rec.color)
    return list(range(freq))


# -- extraction ---------------------------------------------------------------


class ExtractionError(ValueError):
    pass


def _occurrence_days(schedule: PeriodicSchedule, e: int, horizon: int) -> list[int]:
    return [d for d in range(horizon) if e in schedule.days[d % schedule.period]]


def extract_assignment(artifact: ReductionArtifact, schedule: PeriodicSchedule) -> tuple[bool, ...]:
    """Read the variable values out of any valid schedule of the polycule.

    Align the rotation so the clock's red edge sits on days 0 mod 3 (there
    is exactly one such rotation mod 6), check that every color-pinned edge
    keeps to its slots, then read x_i as True iff its red-side value edge
    occupies red slots. The result satisfies at least k clauses.
    """
    violation = verify_dps(artifact.dps, schedule)
    if violation is not None:
        raise ExtractionError(f"schedule invalid: {violation}")
    horizon = schedule.period
    while horizon % 6:
        horizon += schedule.period

    clock = artifact.clock_edges
    clock_days = {c: _occurrence_days(schedule, e, horizon) for c, e in clock.items()}
    rotation = None
    for r in range(6):
        ok = (
            all((d - r) % 3 == 0 for d in clock_days["R"])
            and all((d - r) % 3 == 1 for d in clock_days["B"])
            and all((d - r) % 6 == 2 for d in clock_days["G"])
            and all((d - r) % 6 == 5 for d in clock_days["P"])
        )
        if ok:
            rotation = r
            break
    if rotation is None:
        raise ExtractionError("no rotation aligns the clock to the slot classes")

    residue = {"R": (0, 3), "B": (1, 3), "G": (2, 6), "P": (5, 6)}
    for rec in artifact.edge_recs:
        if rec.color is None:
            continue
        want, mod = residue[rec.color]
        for d in _occurrence_days(schedule, rec.index, horizon):
            if (d - rotation) % mod != want:
                raise ExtractionError(
                    f"edge {rec.index} ({rec.role}) leaves its {rec.color} slots; "
                    "the polycule forbids this, so the schedule data is inconsistent"
                )

    values = []
    for i, pair in enumerate(artifact.var_value_edges, start=1):
        days = _occurrence_days(schedule, pair["R"], horizon)
        residues = {(d - rotation) % 3 for d in days}
        if residues == {0}:
            values.append(True)
        elif residues == {1}:
            values.append(False)
        else:
            raise ExtractionError(f"variable {i} value edge not slot-aligned: {residues}")
    result = tuple(values)
    satisfied = artifact.formula.count_satisfied(result)
    if satisfied < artifact.formula.k:
        raise ExtractionError(
            f"extracted assignment satisfies {satisfied} < k clauses; "
            "schedule contradicts the reduction"
        )
    return result
