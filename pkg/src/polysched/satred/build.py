"""Compile a thresholded 3-CNF formula into a decision polycule.

Layers, top to bottom: a clock person plus one value gadget per variable
(chained by 6-day edges alternating green/purple); duplication chains that
fan out variable values and the four constant classes; one OR gadget per
clause; a bubble sorting network of SWAP comparators that herds blue
(satisfied-clause) outputs leftward; tension gadgets pinning the leftmost k
channel outputs to blue slots. Every frequency is 3, 6, 9, or 12.

Constants are drawn from typed FIFO pools in a fixed construction order, so
the color-forcing chain from the clock stays acyclic. Surplus ports of any
kind end at fresh pendant persons.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from ..core import DpsInstance
from .cnf import CnfFormula

BLUE_PHASE = (1, 4, 7, 10)  # channel c (1-based) uses BLUE_PHASE[(c-1) % 4] mod 12
GREEN_PHASE = (2, 8)  # and GREEN_PHASE[(c-1) % 2] mod 12


def channel_blue_phase(c: int) -> int:
    return BLUE_PHASE[(c - 1) % 4]


def channel_green_phase(c: int) -> int:
    return GREEN_PHASE[(c - 1) % 2]


# constant kinds: frequency and forced slot color
KIND_SPEC = {
    "R3": (3, "R"),
    "B3": (3, "B"),
    "G6": (6, "G"),
    "P6": (6, "P"),
    "B6": (6, "B"),
    "B12": (12, "B"),
    "G12": (12, "G"),
}


@dataclass(frozen=True)
class Port:
    person: int
    gid: int
    name: str


@dataclass
class EdgeRec:
    index: int
    a: int
    b: int
    freq: int
    color: str | None  # R/B/G/P or None for value-carrying edges
    role: str
    src: tuple[int, str]  # (gadget id, port name)
    dst: tuple[int, str]
    layer: str


@dataclass
class GadgetRec:
    gid: int
    kind: str
    layer: str
    persons: dict[str, int] = field(default_factory=dict)
    edges: dict[str, int] = field(default_factory=dict)
    meta: dict = field(default_factory=dict)

    @property
    def name(self) -> str:
        return f"{self.kind}{self.gid}"


@dataclass
class ReductionArtifact:
    dps: DpsInstance
    formula: CnfFormula
    gadgets: list[GadgetRec]
    edge_recs: list[EdgeRec]
    person_labels: list[str]
    density1: list[bool]
    clock_edges: dict[str, int]  # R/B/G/P -> edge index of the clock's four edges
    var_value_edges: list[dict[str, int]]  # per original variable: {"R": idx, "B": idx}
    comparators: list[tuple[int, int]]  # (pair c, swap gid) in execution order
    clause_out: list[int]  # OR gadget gid per clause
    channel_of_edge: dict[int, int]  # channel-carrying edge -> channel index

    def gadget(self, gid: int) -> GadgetRec:
        return self.gadgets[gid]

    def provenance_lines(self) -> list[str]:
        out = []
        for rec in self.edge_recs:
            src = f"{self.gadgets[rec.src[0]].name}:{rec.src[1]}"
            dst = f"{self.gadgets[rec.dst[0]].name}:{rec.dst[1]}"
            out.append(f"{rec.a} {rec.b} {rec.freq} {src} -> {dst} {rec.layer}")
        return out


class CompileError(RuntimeError):
    pass


class _Builder:
    def __init__(self, formula: CnfFormula):
        self.formula = formula
        self.labels: list[str] = []
        self.density1: list[bool] = []
        self.edge_pairs: list[tuple[int, int]] = []
        self.pair_set: set[tuple[int, int]] = set()
        self.freqs: list[int] = []
        self.recs: list[EdgeRec] = []
        self.gadgets: list[GadgetRec] = []
        self.pools: dict[str, deque[Port]] = {k: deque() for k in ("R3", "B3", "G6", "P6", "B6")}
        self.phase_pools: dict[str, dict[int, deque[Port]]] = {
            "B12": {p: deque() for p in BLUE_PHASE},
            "G12": {p: deque() for p in GREEN_PHASE},
        }
        self.lit_ports: dict[tuple[int, int], deque[Port]] = {}
        self.channel_of_edge: dict[int, int] = {}

    # -- structure primitives --------------------------------------------

    def person(self, label: str, density1: bool) -> int:
        self.labels.append(label)
        self.density1.append(density1)
        return len(self.labels) - 1

    def gadget(self, kind: str, layer: str, **meta) -> GadgetRec:
        g = GadgetRec(len(self.gadgets), kind, layer, meta=dict(meta))
        self.gadgets.append(g)
        return g

    def edge(self, src_g: GadgetRec, src_name: str, a: int,
             dst_g: GadgetRec, dst_name: str, b: int,
             freq: int, color: str | None, role: str) -> int:
        if a == b:
            raise CompileError(f"self-loop at person {a} ({role})")
        pair = (a, b) if a < b else (b, a)
        if pair in self.pair_set:
            raise CompileError(f"duplicate edge {pair} ({role})")
        idx = len(self.edge_pairs)
        self.edge_pairs.append(pair)
        self.pair_set.add(pair)
        self.freqs.append(freq)
        self.recs.append(EdgeRec(idx, pair[0], pair[1], freq, color, role,
                                 (src_g.gid, src_name), (dst_g.gid, dst_name),
                                 dst_g.layer))
        src_g.edges[src_name] = idx
        if dst_g.gid != src_g.gid or dst_name != src_name:
            dst_g.edges[dst_name] = idx
        return idx

    def internal(self, g: GadgetRec, name: str, a: int, b: int,
                 freq: int, color: str | None, role: str) -> int:
        return self.edge(g, name, a, g, name, b, freq, color, role)

    # -- pools --------------------------------------------------------------

    def produce(self, kind: str, g: GadgetRec, name: str, person: int) -> None:
        self.pools[kind].append(Port(person, g.gid, name))

    def produce_phase(self, kind: str, phase: int, g: GadgetRec, name: str, person: int) -> None:
        self.phase_pools[kind][phase].append(Port(person, g.gid, name))
        g.meta.setdefault("port_phase", {})[name] = phase

    def _pop_compatible(self, pool: deque[Port], person: int, what: str) -> Port:
        """First pooled port whose producer is not already adjacent to `person`."""
        for i, port in enumerate(pool):
            if port.person != person and (min(port.person, person), max(port.person, person)) not in self.pair_set:
                del pool[i]
                return port
        raise CompileError(f"no compatible port in pool for {what}")

    def consume(self, kind: str, g: GadgetRec, name: str, person: int) -> int:
        if not self.pools[kind]:
            raise CompileError(f"constant pool {kind} ran dry at {g.name}:{name}")
        port = self._pop_compatible(self.pools[kind], person, f"{kind} at {g.name}:{name}")
        freq, color = KIND_SPEC[kind]
        src = self.gadgets[port.gid]
        return self.edge(src, port.name, port.person, g, name, person,
                         freq, color, f"const-{kind}")

    def consume_phase(self, kind: str, phase: int, g: GadgetRec, name: str, person: int) -> int:
        pool = self.phase_pools[kind][phase]
        if not pool:
            raise CompileError(f"{kind}@{phase} pool ran dry at {g.name}:{name}")
        port = self._pop_compatible(pool, person, f"{kind}@{phase} at {g.name}:{name}")
        freq, color = KIND_SPEC[kind]
        src = self.gadgets[port.gid]
        return self.edge(src, port.name, port.person, g, name, person,
                         freq, color, f"const-{kind}")

    def consume_literal(self, var: int, pol: int, g: GadgetRec, name: str, person: int) -> int:
        ports = self.lit_ports[(var, pol)]
        if not ports:
            raise CompileError(f"literal pool ({var},{pol:+d}) ran dry at {g.name}")
        port = self._pop_compatible(ports, person, f"literal ({var},{pol:+d}) at {g.name}")
        src = self.gadgets[port.gid]
        return self.edge(src, port.name, port.person, g, name, person, 3, None, "value")

    def consume_channel(self, port: Port, channel: int, g: GadgetRec, name: str,
                        person: int) -> int:
        src = self.gadgets[port.gid]
        idx = self.edge(src, port.name, port.person, g, name, person, 12, None, "channel")
        self.channel_of_edge[idx] = channel
        return idx


def _plan(formula: CnfFormula) -> dict:
    """Closed-form gadget counts, with a fixpoint for the duplication chains."""
    m = formula.num_clauses
    k = formula.k
    w = m * (m - 1) // 2
    t = -(-k // 4) if k > 0 else 0  # tension gadgets, 4 channels each
    fills = sum(3 - len(c) for c in formula.clauses)
    n_b6 = 6 * w  # one splitter per consumed 6B port (second port -> pendant)
    b12_demand: dict[int, int] = {p: 0 for p in BLUE_PHASE}
    g12_demand: dict[int, int] = {p: 0 for p in GREEN_PHASE}
    for c in range(1, m):
        for _ in range(c):  # pair c hosts c comparators
            b12_demand[(channel_blue_phase(c) + 6) % 12] += 1
            g12_demand[(channel_green_phase(c) + 6) % 12] += 1
    n_b12 = max(b12_demand.values(), default=0)
    n_g12 = max(g12_demand.values(), default=0)

    pos = {i: 0 for i in range(1, formula.num_vars + 1)}
    neg = {i: 0 for i in range(1, formula.num_vars + 1)}
    for clause in formula.clauses:
        for lit in clause:
            (pos if lit > 0 else neg)[abs(lit)] += 1
    lit_rows = {}
    for i in range(1, formula.num_vars + 1):
        for pol, count in ((1, pos[i]), (-1, neg[i])):
            lit_rows[(i, pol)] = 0 if count <= 1 else -(-count // 3)

    lr, lb, kp = 1, 1, 1  # R3-chain rows, B3-chain rows, 6P-duplicator layers
    for _ in range(64):
        n_chains = 2 + sum(1 for v in lit_rows.values() if v)
        total_rows = lr + lb + sum(lit_rows.values())
        need_r3 = m + 8 * w + t + n_b6 + n_b12 + n_g12 + kp
        need_b3 = fills + n_g12 + 1
        need_g6 = t + n_b6 + n_b12 + n_chains  # chain entry nodes each take one
        need_p6 = 8 * w + t + n_b6 + n_b12 + n_g12 + 1 + total_rows  # +1 duplicator root
        have_g6 = 1 + total_rows  # trailing variable output, plus one per row
        lr2 = max(1, -(-need_r3 // 3))
        lb2 = max(1, -(-need_b3 // 3))
        if have_g6 < need_g6:  # pad the R3 chain; every extra row emits green
            lr2 = max(lr2, lr + (need_g6 - have_g6))
        have_p6 = 1 + n_chains + 2 * kp  # clock, chain entry nodes, duplicator
        kp2 = kp if have_p6 >= need_p6 else kp + -(-(need_p6 - have_p6) // 2)
        if (lr2, lb2, kp2) == (lr, lb, kp):
            break
        lr, lb, kp = max(lr, lr2), max(lb, lb2), max(kp, kp2)
    else:
        raise CompileError("chain sizing did not converge")
    return {
        "w": w, "t": t, "fills": fills, "n_b6": n_b6, "n_b12": n_b12,
        "n_g12": n_g12, "pos": pos, "neg": neg, "lit_rows": lit_rows,
        "lr": lr, "lb": lb, "kp": kp,
    }


def _build_variables(b: _Builder, n_padded: int) -> GadgetRec:
    layer = "variable"
    clock = b.gadget("TrueClock", layer)
    t_person = b.person("T", True)
    clock.persons["T"] = t_person
    b.produce("R3", clock, "r3", t_person)
    b.produce("B3", clock, "b3", t_person)
    b.produce("P6", clock, "p6", t_person)
    prev_g, prev_name, prev_person = clock, "g6", t_person
    for i in range(1, n_padded + 1):
        g = b.gadget("Variable", layer, var=i)
        x = b.person(f"x{i}", True)
        g.persons["x"] = x
        color = "G" if i % 2 == 1 else "P"
        b.edge(prev_g, prev_name, prev_person, g, "chain_in", x, 6, color, "var-chain")
        b.lit_ports[(i, 1)] = deque([Port(x, g.gid, "valR")])
        b.lit_ports[(i, -1)] = deque([Port(x, g.gid, "valB")])
        prev_g, prev_name, prev_person = g, "chain_out", x
    # the final (even-indexed) variable's forward output is green
    b.produce("G6", prev_g, prev_name, prev_person)
    return clock


def _nine_color(signal: tuple) -> str | None:
    # duplicating a red constant pins the nine-edges blue, and vice versa
    if signal == ("const", "R3"):
        return "B"
    if signal == ("const", "B3"):
        return "R"
    return None


def _copy_color(signal: tuple) -> str | None:
    if signal == ("const", "R3"):
        return "R"
    if signal == ("const", "B3"):
        return "B"
    return None


def _start_d3_chain(b: _Builder, signal: tuple, layer: str) -> GadgetRec:
    """Entry node of a value/constant duplicator chain (no rows yet)."""
    g = b.gadget("D3", layer, signal=signal, rows=0)
    a = b.person(f"D3[{signal_label(signal)}].a", True)
    g.persons["a"] = a
    if signal[0] == "lit":
        _, var, pol = signal
        b.consume_literal(var, pol, g, "in", a)
    else:
        b.consume(signal[1], g, "in", a)
    b.consume("G6", g, "g6_in", a)
    b.produce("P6", g, "p6_out", a)
    g.meta["open_stubs"] = [(a, f"nine.a{j}") for j in range(3)]
    g.meta["nine_color"] = _nine_color(signal)
    g.meta["copy_color"] = _copy_color(signal)
    g.meta["copies"] = 0
    return g


def signal_label(signal: tuple) -> str:
    if signal[0] == "lit":
        return f"x{signal[1]}{'+' if signal[2] > 0 else '-'}"
    return signal[1]


def _extend_d3_chain(b: _Builder, g: GadgetRec, extra_rows: int) -> None:
    """Add rows of three copy nodes each, hanging off open nine-stubs."""
    signal = g.meta["signal"]
    nine_color = g.meta["nine_color"]
    copy_color = g.meta["copy_color"]
    stubs = deque(g.meta["open_stubs"])
    tag = signal_label(signal)
    for _ in range(extra_rows):
        r = g.meta["rows"] + 1
        g.meta["rows"] = r
        nodes = []
        for j in range(3):
            node = b.person(f"D3[{tag}].r{r}n{j}", True)
            g.persons[f"r{r}n{j}"] = node
            parent, pname = stubs.popleft()
            b.edge(g, pname, parent, g, f"nine.up.r{r}n{j}", node, 9, nine_color, "nine")
            nodes.append(node)
        b.consume("P6", g, f"p6_in.r{r}", nodes[0])
        b.internal(g, f"six.r{r}.01", nodes[0], nodes[1], 6, "G", "row-chain")
        b.internal(g, f"six.r{r}.12", nodes[1], nodes[2], 6, "P", "row-chain")
        b.produce("G6", g, f"g6_out.r{r}", nodes[2])
        for j, node in enumerate(nodes):
            g.meta["copies"] += 1
            port = Port(node, g.gid, f"copy{g.meta['copies']}")
            if signal[0] == "lit":
                b.lit_ports[(signal[1], signal[2])].append(port)
            else:
                b.pools[signal[1]].append(port)
            stubs.append((node, f"nine.r{r}n{j}.0"))
            stubs.append((node, f"nine.r{r}n{j}.1"))
    g.meta["open_stubs"] = list(stubs)


def _build_p6_duplicator(b: _Builder, layers: int, layer: str) -> GadgetRec:
    """Purple-constant duplicator: entry triple, then two persons per extra layer."""
    g = b.gadget("D6", layer, layers=layers)
    a = b.person("D6.a", True)
    p_b = b.person("D6.b", True)
    p_c = b.person("D6.c", True)
    g.persons.update({"a": a, "b": p_b, "c": p_c})
    b.consume("P6", g, "root", a)
    b.consume("B3", g, "b3_in", a)
    b.produce("R3", g, "r3_out.a", a)
    b.internal(g, "g12.ab", a, p_b, 12, "G", "twelve")
    b.internal(g, "g12.ac", a, p_c, 12, "G", "twelve")
    b.consume("R3", g, "r3_in.b", p_b)
    b.internal(g, "b3.bc", p_b, p_c, 3, "B", "three")
    b.produce("R3", g, "r3_out.c", p_c)
    b.produce("P6", g, "p6_out.b", p_b)
    b.produce("P6", g, "p6_out.c", p_c)
    stubs: deque[tuple[int, str]] = deque([(p_b, "g12.b.down"), (p_c, "g12.c.down")])
    for j in range(2, layers + 1):
        d = b.person(f"D6.l{j}d", True)
        e = b.person(f"D6.l{j}e", True)
        g.persons[f"l{j}d"] = d
        g.persons[f"l{j}e"] = e
        for node, tag in ((d, "d"), (e, "e")):
            parent, pname = stubs.popleft()
            b.edge(g, pname, parent, g, f"g12.up.l{j}{tag}", node, 12, "G", "twelve")
        b.consume("R3", g, f"r3_in.l{j}", d)
        b.internal(g, f"b3.l{j}", d, e, 3, "B", "three")
        b.produce("R3", g, f"r3_out.l{j}", e)
        b.produce("P6", g, f"p6_out.l{j}d", d)
        b.produce("P6", g, f"p6_out.l{j}e", e)
        stubs.append((d, f"g12.l{j}d.down"))
        stubs.append((e, f"g12.l{j}e.down"))
    g.meta["open_stubs"] = list(stubs)
    return g


def _build_sb6(b: _Builder) -> GadgetRec:
    g = b.gadget("SB6", "sorting")
    node = b.person(f"{g.name}.s", True)
    g.persons["s"] = node
    b.consume("R3", g, "r3", node)
    b.consume("G6", g, "g6", node)
    b.consume("P6", g, "p6", node)
    b.produce("B6", g, "out1", node)
    # the paired second output goes straight to its own pendant person
    pend = b.person(f"{g.name}.pend", False)
    g.persons["pend"] = pend
    b.internal(g, "out2", node, pend, 6, "B", "splitter-spare")
    return g


def _build_sb12(b: _Builder) -> GadgetRec:
    g = b.gadget("SB12", "sorting")
    node = b.person(f"{g.name}.s", True)
    g.persons["s"] = node
    b.consume("R3", g, "r3", node)
    b.consume("G6", g, "g6", node)
    b.consume("P6", g, "p6", node)
    for i, phase in enumerate(BLUE_PHASE):
        b.produce_phase("B12", phase, g, f"out{i}", node)
    return g


def _build_sg12(b: _Builder) -> GadgetRec:
    g = b.gadget("SG12", "sorting")
    node = b.person(f"{g.name}.s", True)
    g.persons["s"] = node
    b.consume("R3", g, "r3", node)
    b.consume("B3", g, "b3", node)
    b.consume("P6", g, "p6", node)
    for i, phase in enumerate(GREEN_PHASE):
        b.produce_phase("G12", phase, g, f"out{i}", node)
    return g


def _build_or(b: _Builder, clause: tuple[int, ...], clause_idx: int) -> GadgetRec:
    """Clause gadget: three inverter persons feeding a density-1 OR person."""
    g = b.gadget("OR", "clause", clause=clause_idx)
    orp = b.person(f"{g.name}.or", True)
    g.persons["or"] = orp
    lit_of_input: dict[int, int] = {}
    for i in range(3):
        inv = b.person(f"{g.name}.i{i}", False)
        g.persons[f"i{i}"] = inv
        if i < len(clause):
            lit = clause[i]
            b.consume_literal(abs(lit), 1 if lit > 0 else -1, g, f"lit{i}", inv)
            lit_of_input[i] = lit
        else:
            b.consume("B3", g, f"fill{i}", inv)  # short clause: constant False input
        b.internal(g, f"t12.{i}", inv, orp, 12, None, "or-link")
    b.consume("R3", g, "r3", orp)
    for i in (1, 2):
        filler = b.person(f"{g.name}.f{i}", False)
        g.persons[f"f{i}"] = filler
        b.internal(g, f"six.{i}", orp, filler, 6, None, "or-fill")
    g.meta["lit_of_input"] = lit_of_input
    g.meta["out_port"] = Port(orp, g.gid, "out")
    return g


def _build_swap(b: _Builder, pair_c: int, tier: int, in1: Port, in2: Port) -> GadgetRec:
    """Comparator: duplicate both inputs, OR them leftward, AND them rightward."""
    g = b.gadget("Swap", "sorting", pair=pair_c, tier=tier)

    def person(tag: str, d1: bool = True) -> int:
        p = b.person(f"{g.name}.{tag}", d1)
        g.persons[tag] = p
        return p

    # duplicators for the two channel inputs
    for side, port in ((1, in1), (2, in2)):
        i_node = person(f"I{side}")
        d_node = person(f"D{side}")
        spare = person(f"sp{side}", False)
        channel = pair_c + side - 1
        b.consume_channel(port, channel, g, f"in{side}", i_node)
        b.internal(g, f"oprime{side}", i_node, spare, 12, None, "dup-spare")
        b.internal(g, f"obar{side}", i_node, d_node, 6, None, "dup-link")
        for node, tag in ((i_node, f"i{side}"), (d_node, f"d{side}")):
            b.consume("R3", g, f"r3.{tag}", node)
            b.consume("P6", g, f"p6.{tag}", node)
            b.consume("B6", g, f"b6.{tag}", node)

    v_node = person("V")
    iv_node = person("IV")
    a_node = person("A")
    ia_node = person("IA")
    # copies: left copies feed the OR side, right copies the AND side
    b.internal(g, "o11", g.persons["D1"], v_node, 12, None, "dup-out")
    b.internal(g, "o12", g.persons["D1"], a_node, 12, None, "dup-out")
    b.internal(g, "o21", g.persons["D2"], v_node, 12, None, "dup-out")
    b.internal(g, "o22", g.persons["D2"], a_node, 12, None, "dup-out")
    # OR half
    sp_v12 = person("spV12", False)
    sp_v6 = person("spV6", False)
    b.internal(g, "vs12", v_node, sp_v12, 12, None, "or2-spare")
    b.internal(g, "vs6", v_node, sp_v6, 6, None, "or2-spare")
    b.internal(g, "vprime", v_node, iv_node, 12, None, "or2-link")
    b.consume("R3", g, "r3.v", v_node)
    b.consume("P6", g, "p6.v", v_node)
    b.consume("R3", g, "r3.iv", iv_node)
    b.consume("P6", g, "p6.iv", iv_node)
    b.consume("B6", g, "b6.iv", iv_node)
    b.consume_phase("B12", (channel_blue_phase(pair_c) + 6) % 12, g, "b12.iv", iv_node)
    b.consume_phase("G12", (channel_green_phase(pair_c) + 6) % 12, g, "g12.iv", iv_node)
    # AND half
    sp_a1 = person("spA1", False)
    sp_a2 = person("spA2", False)
    sp_a3 = person("spA3", False)
    b.internal(g, "as12a", a_node, sp_a1, 12, None, "and2-spare")
    b.internal(g, "as12b", a_node, sp_a2, 12, None, "and2-spare")
    b.internal(g, "aand", a_node, ia_node, 6, None, "and2-link")
    b.consume("R3", g, "r3.a", a_node)
    b.consume("P6", g, "p6.a", a_node)
    b.consume("R3", g, "r3.ia", ia_node)
    b.consume("P6", g, "p6.ia", ia_node)
    b.consume("B6", g, "b6.ia", ia_node)
    b.internal(g, "aprime", ia_node, sp_a3, 12, None, "and2-spare")
    g.meta["out_or"] = Port(iv_node, g.gid, "out_or")
    g.meta["out_and"] = Port(ia_node, g.gid, "out_and")
    return g


def _build_tension(b: _Builder, inputs: list[tuple[Port, int] | None]) -> GadgetRec:
    """Pin up to four channel outputs to blue slots; unused inputs get pendants."""
    g = b.gadget("Tension", "tension")
    t_node = b.person(f"{g.name}.t", True)
    g.persons["t"] = t_node
    for i, item in enumerate(inputs):
        if item is not None:
            port, channel = item
            b.consume_channel(port, channel, g, f"in{i}", t_node)
        else:
            pend = b.person(f"{g.name}.pend{i}", False)
            g.persons[f"pend{i}"] = pend
            b.internal(g, f"fill{i}", t_node, pend, 12, "B", "tension-fill")
    b.consume("R3", g, "r3", t_node)
    b.consume("G6", g, "g6", t_node)
    b.consume("P6", g, "p6", t_node)
    return g


def comparator_order(m: int) -> list[tuple[int, int]]:
    """(tier, pair) execution order of the bubble network: tiers top-down.

    Pair c (channels c, c+1) hosts comparators at tiers c-1, c-3, ..., 1-c.
    """
    items = []
    for c in range(1, m):
        for tier in range(c - 1, -c, -2):
            items.append((tier, c))
    items.sort(key=lambda tc: (-tc[0], tc[1]))
    return items


def _attach_pendant(b: _Builder, port: Port, freq: int, color: str | None,
                    role: str, layer: str, channel: int | None = None) -> None:
    g = b.gadget("Pendant", layer)
    p = b.person(f"{g.name}.p", False)
    g.persons["p"] = p
    src = b.gadgets[port.gid]
    idx = b.edge(src, port.name, port.person, g, "in", p, freq, color, role)
    if channel is not None:
        b.channel_of_edge[idx] = channel


def compile_formula(formula: CnfFormula) -> ReductionArtifact:
    """Build the polycule that is schedulable iff >= k clauses are satisfiable."""
    plan = _plan(formula)
    b = _Builder(formula)
    # at least one variable pair: the chain supplies the first green port
    n_padded = max(2, formula.num_vars + (formula.num_vars % 2))
    clock = _build_variables(b, n_padded)

    # constant supply, in an order that keeps every pool ahead of demand
    r3_chain = _start_d3_chain(b, ("const", "R3"), "duplication")
    _extend_d3_chain(b, r3_chain, 1)
    b3_chain = _start_d3_chain(b, ("const", "B3"), "duplication")
    _extend_d3_chain(b, b3_chain, 1)
    _build_p6_duplicator(b, plan["kp"], "duplication")
    _extend_d3_chain(b, r3_chain, plan["lr"] - 1)
    _extend_d3_chain(b, b3_chain, plan["lb"] - 1)

    lit_chains = []
    for i in range(1, formula.num_vars + 1):
        for pol in (1, -1):
            rows = plan["lit_rows"][(i, pol)]
            if rows:
                chain = _start_d3_chain(b, ("lit", i, pol), "duplication")
                _extend_d3_chain(b, chain, rows)
                lit_chains.append(chain)

    for _ in range(plan["n_b6"]):
        _build_sb6(b)
    for _ in range(plan["n_b12"]):
        _build_sb12(b)
    for _ in range(plan["n_g12"]):
        _build_sg12(b)

    or_gadgets = [_build_or(b, clause, j) for j, clause in enumerate(formula.clauses)]
    channels: list[tuple[Port, int]] = [
        (g.meta["out_port"], j + 1) for j, g in enumerate(or_gadgets)
    ]

    comparators: list[tuple[int, int]] = []
    for tier, c in comparator_order(formula.num_clauses):
        in1, _ = channels[c - 1]
        in2, _ = channels[c]
        swap = _build_swap(b, c, tier, in1, in2)
        comparators.append((c, swap.gid))
        channels[c - 1] = (swap.meta["out_or"], c)
        channels[c] = (swap.meta["out_and"], c + 1)

    k = formula.k
    for t0 in range(0, k, 4):
        group: list[tuple[Port, int] | None] = []
        for j in range(t0, t0 + 4):
            group.append(channels[j] if j < k else None)
        _build_tension(b, group)
    for j in range(k, formula.num_clauses):
        port, channel = channels[j]
        _attach_pendant(b, port, 12, None, "channel-out", "tension", channel=channel)

    # surplus ports of every kind end at pendants
    for i in range(1, n_padded + 1):
        for pol in (1, -1):
            for port in b.lit_ports.get((i, pol), ()):  # pool may be partially drained
                _attach_pendant(b, port, 3, None, "value-spare", "duplication")
            b.lit_ports[(i, pol)] = deque()
    for kind in ("R3", "B3", "G6", "P6", "B6"):
        freq, color = KIND_SPEC[kind]
        while b.pools[kind]:
            _attach_pendant(b, b.pools[kind].popleft(), freq, color,
                            f"surplus-{kind}", "duplication")
    for kind, pools in b.phase_pools.items():
        freq, color = KIND_SPEC[kind]
        for phase in sorted(pools):
            while pools[phase]:
                _attach_pendant(b, pools[phase].popleft(), freq, color,
                                f"surplus-{kind}", "sorting")
    for g in b.gadgets:
        if g.kind in ("D3", "D6") and g.meta.get("open_stubs"):
            freq = 9 if g.kind == "D3" else 12
            color = g.meta.get("nine_color") if g.kind == "D3" else "G"
            for person, pname in g.meta["open_stubs"]:
                _attach_pendant(b, Port(person, g.gid, pname), freq, color,
                                "stub-spare", g.layer)
            g.meta["open_stubs"] = []

    dps = DpsInstance(len(b.labels), tuple(b.edge_pairs), tuple(b.freqs))
    _validate(b, dps)

    var_value_edges = []
    for i in range(1, formula.num_vars + 1):
        gvar = next(g for g in b.gadgets if g.kind == "Variable" and g.meta["var"] == i)
        var_value_edges.append({"R": gvar.edges["valR"], "B": gvar.edges["valB"]})

    clock_edges = {
        "R": clock.edges["r3"],
        "B": clock.edges["b3"],
        "G": clock.edges["g6"],
        "P": clock.edges["p6"],
    }
    return ReductionArtifact(
        dps=dps,
        formula=formula,
        gadgets=b.gadgets,
        edge_recs=b.recs,
        person_labels=b.labels,
        density1=b.density1,
        clock_edges=clock_edges,
        var_value_edges=var_value_edges,
        comparators=comparators,
        clause_out=[g.gid for g in or_gadgets],
        channel_of_edge=b.channel_of_edge,
    )


def _validate(b: _Builder, dps: DpsInstance) -> None:
    from fractions import Fraction

    if any(f not in (3, 6, 9, 12) for f in dps.freq):
        raise CompileError("emitted a frequency outside {3, 6, 9, 12}")
    load = [Fraction(0)] * dps.n
    for (x, y), f in zip(dps.edges, dps.freq):
        load[x] += Fraction(1, f)
        load[y] += Fraction(1, f)
    for p, dense in enumerate(b.density1):
        if dense and load[p] != 1:
            raise CompileError(
                f"density-1 person {b.labels[p]} has load {load[p]}"
            )
        if not dense and load[p] >= 1 and b.labels[p].startswith(("Pendant",)):
            raise CompileError(f"pendant {b.labels[p]} overloaded")


def density_one_persons(artifact: ReductionArtifact) -> list[int]:
    return [p for p, dense in enumerate(artifact.density1) if dense]
