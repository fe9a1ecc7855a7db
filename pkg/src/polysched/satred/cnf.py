"""3-CNF formulas with a satisfied-clause threshold, DIMACS I/O, brute-force oracle.

Literals are nonzero ints: +i for x_i, -i for its negation (1-based, DIMACS
style). The threshold k asks whether some assignment satisfies at least k
clauses simultaneously.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple[tuple[int, ...], ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))
        if self.num_vars < 0:
            raise ValueError("variable count must be >= 0")
        if not 0 <= self.k <= len(self.clauses):
            raise ValueError("threshold k must satisfy 0 <= k <= #clauses")
        for c in self.clauses:
            if not c:
                raise ValueError("empty clauses are not allowed")
            if len(c) > 3:
                raise ValueError(f"clause {c} has more than 3 literals")
            if len(set(c)) != len(c):
                raise ValueError(f"duplicate literal in clause {c}")
            for lit in c:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"literal {lit} out of range")

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def count_satisfied(self, assignment) -> int:
        """Clauses satisfied by assignment[i] = truth value of x_{i+1}."""
        if len(assignment) != self.num_vars:
            raise ValueError("assignment length must equal the variable count")
        total = 0
        for c in self.clauses:
            if any(assignment[abs(lit) - 1] == (lit > 0) for lit in c):
                total += 1
        return total


def max3sat_oracle(formula: CnfFormula) -> int:
    """Exact maximum simultaneously satisfiable clause count, by enumeration."""
    if formula.num_vars > 20:
        raise ValueError("oracle enumerates 2^n assignments; needs n <= 20")
    if not formula.clauses:
        return 0
    best = 0
    for bits in product((False, True), repeat=formula.num_vars):
        best = max(best, formula.count_satisfied(bits))
        if best == formula.num_clauses:
            break
    return best


def parse_dimacs(text: str, k: int | None = None) -> CnfFormula:
    """Standard DIMACS CNF; threshold defaults to the clause count."""
    num_vars = None
    declared = None
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"line {lineno}: malformed problem line {line!r}")
            num_vars, declared = int(parts[2]), int(parts[3])
            continue
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                if current:
                    clauses.append(tuple(current))
                    current = []
            else:
                current.append(lit)
    if current:
        clauses.append(tuple(current))
    if num_vars is None:
        raise ValueError("missing 'p cnf' problem line")
    if declared is not None and declared != len(clauses):
        raise ValueError(f"declared {declared} clauses, found {len(clauses)}")
    if k is None:
        k = len(clauses)
    return CnfFormula(num_vars, tuple(clauses), k)


def emit_dimacs(formula: CnfFormula) -> str:
    lines = [f"p cnf {formula.num_vars} {formula.num_clauses}"]
    for c in formula.clauses:
        lines.append(" ".join(str(lit) for lit in c) + " 0")
    return "\n".join(lines) + "\n"


def demo_formula(k: int = 3) -> CnfFormula:
    """(x1 v x2) & (!x1) & (x1 v !x2 v x3) & (!x3); at most 3 simultaneously."""
    return CnfFormula(3, ((1, 2), (-1,), (1, -2, 3), (-3,)), k)
