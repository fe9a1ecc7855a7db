"""Text formats for instances, schedules, and CNF formulas.

Instance: header ``ops n m`` or ``dps n m``, then m lines ``a b value``.
Schedule: header ``sched T``, then T lines of space-separated ``a-b`` edge
tokens (an empty line is an empty day). Emission is canonical (rationals as
``p/q``, integers bare), so emit(parse(x)) is byte-stable on canonical files.
"""

from __future__ import annotations

from fractions import Fraction

from .core import DpsInstance, OpsInstance, PeriodicSchedule, as_rational, normalize_edge


class ParseError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def emit_instance(instance: OpsInstance | DpsInstance) -> str:
    lines = []
    if isinstance(instance, OpsInstance):
        lines.append(f"ops {instance.n} {instance.m}")
        for (a, b), g in zip(instance.edges, instance.growth):
            lines.append(f"{a} {b} {format_rational(g)}")
    else:
        lines.append(f"dps {instance.n} {instance.m}")
        for (a, b), f in zip(instance.edges, instance.freq):
            lines.append(f"{a} {b} {f}")
    return "\n".join(lines) + "\n"


def parse_instance(text: str) -> OpsInstance | DpsInstance:
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty instance file", 1)
    head = lines[0].split()
    if len(head) != 3 or head[0] not in ("ops", "dps"):
        raise ParseError("expected header 'ops n m' or 'dps n m'", 1)
    try:
        n, m = int(head[1]), int(head[2])
    except ValueError:
        raise ParseError("n and m must be integers", 1) from None
    body = [(i + 2, ln) for i, ln in enumerate(lines[1:]) if ln.strip()]
    if len(body) != m:
        raise ParseError(f"expected {m} edge lines, found {len(body)}",
                         body[-1][0] if body else 2)
    edges: list[tuple[int, int]] = []
    values = []
    for lineno, ln in body:
        parts = ln.split()
        if len(parts) != 3:
            raise ParseError("expected 'a b value'", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("endpoints must be integers", lineno) from None
        try:
            edges.append(normalize_edge(a, b))
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
        if head[0] == "ops":
            try:
                g = as_rational(parts[2])
            except (ValueError, ZeroDivisionError, TypeError):
                raise ParseError(f"bad growth rate {parts[2]!r}", lineno) from None
            if g <= 0:
                raise ParseError("growth rate must be > 0", lineno)
            values.append(g)
        else:
            try:
                f = int(parts[2])
            except ValueError:
                raise ParseError(f"bad frequency {parts[2]!r}", lineno) from None
            if f < 1:
                raise ParseError("frequency must be >= 1", lineno)
            values.append(f)
    try:
        if head[0] == "ops":
            return OpsInstance(n, tuple(edges), tuple(values))
        return DpsInstance(n, tuple(edges), tuple(values))
    except ValueError as exc:
        raise ParseError(str(exc), 1) from None


def emit_schedule(instance: OpsInstance | DpsInstance, schedule: PeriodicSchedule) -> str:
    lines = [f"sched {schedule.period}"]
    for day in schedule.days:
        tokens = [f"{instance.edges[e][0]}-{instance.edges[e][1]}" for e in sorted(day)]
        lines.append(" ".join(tokens))
    return "\n".join(lines) + "\n"


def parse_schedule(instance: OpsInstance | DpsInstance, text: str) -> PeriodicSchedule:
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty schedule file", 1)
    head = lines[0].split()
    if len(head) != 2 or head[0] != "sched":
        raise ParseError("expected header 'sched T'", 1)
    try:
        period = int(head[1])
    except ValueError:
        raise ParseError("T must be an integer", 1) from None
    if len(lines) - 1 != period:
        raise ParseError(f"expected {period} day lines, found {len(lines) - 1}", len(lines))
    index = instance.edge_index()
    days = []
    for lineno, ln in enumerate(lines[1:], start=2):
        day = set()
        for token in ln.split():
            try:
                a_s, b_s = token.split("-", 1)
                edge = normalize_edge(int(a_s), int(b_s))
            except ValueError:
                raise ParseError(f"bad edge token {token!r}", lineno) from None
            if edge not in index:
                raise ParseError(f"edge {token!r} not in instance", lineno)
            day.add(index[edge])
        days.append(frozenset(day))
    return PeriodicSchedule(period, tuple(days))
