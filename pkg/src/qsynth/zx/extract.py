"""Frontier-based circuit extraction from reduced graph-like diagrams."""

from __future__ import annotations

import logging
from typing import Literal

from ..circuit.core import QuantumCircuit
from ..circuit.gates import CX, CZ, SWAP, Gate, H, Z, RZ
from ..circuit.phase import Phase
from ..gf2 import BooleanMatrix, gaussian_elimination
from . import rules
from .diagram import EdgeType, VertexType, ZXDiagram, toggle

log = logging.getLogger(__name__)

GadgetStrategy = Literal["naive", "greedy", "best"]


class ExtractionError(RuntimeError):
    def __init__(self, message: str, frontier: dict[int, int], diagram: ZXDiagram):
        detail = ", ".join(f"q{q}:v{v}(nbrs {diagram.neighbors(v)})" for q, v in sorted(frontier.items()))
        super().__init__(f"{message}; frontier [{detail}]")
        self.frontier = dict(frontier)


def _phase_gate(q: int, p: Phase) -> Gate:
    return Z(q) if p == Phase(1) else RZ(q, p)


class _Extractor:
    def __init__(self, d: ZXDiagram, strategy: GadgetStrategy):
        if len(d.inputs) != len(d.outputs):
            raise ValueError("extraction needs as many inputs as outputs")
        self.d = d.copy()
        self.strategy = strategy
        self.n = len(d.outputs)
        self.rev: list[Gate] = []
        self.inputs = set(d.inputs)
        self.frontier: dict[int, int] = {}
        for q, o in enumerate(self.d.outputs):
            (v, _), = self.d.incident(o).items()
            if v not in self.inputs:
                self.frontier[q] = v

    def fail(self, msg: str) -> ExtractionError:
        return ExtractionError(msg, self.frontier, self.d)

    def emit(self, g: Gate) -> None:
        self.rev.append(g)

    def clean_frontier(self) -> None:
        d = self.d
        for q, v in sorted(self.frontier.items()):
            o = d.outputs[q]
            if d.edge_type(v, o) == EdgeType.HADAMARD:
                self.emit(H(q))
                d.set_edge_type(v, o, EdgeType.SIMPLE)
            if not d.phase(v).is_zero():
                self.emit(_phase_gate(q, d.phase(v)))
                d.set_phase(v, Phase(0))
        items = sorted(self.frontier.items())
        for i, (q1, v1) in enumerate(items):
            for q2, v2 in items[i + 1:]:
                if d.connected(v1, v2):
                    if d.edge_type(v1, v2) != EdgeType.HADAMARD:
                        raise self.fail("simple edge between frontier spiders")
                    self.emit(CZ(q1, q2))
                    d.remove_edge(v1, v2)

    def neighbors(self, v: int) -> list[int]:
        o = set(self.d.outputs)
        return [w for w in self.d.neighbors(v) if w not in o]

    def separate_inputs(self) -> list[int]:
        """Split frontier spiders from inputs; return the qubits still in progress."""
        d = self.d
        active = []
        for q, v in sorted(self.frontier.items()):
            nbrs = self.neighbors(v)
            ins = [w for w in nbrs if w in self.inputs]
            if ins and len(nbrs) == 1:
                continue
            if not nbrs:
                raise self.fail(f"frontier spider {v} has no past")
            if ins:
                b = ins[0]
                et = d.edge_type(v, b)
                d.remove_edge(v, b)
                w = d.add_vertex(VertexType.Z, qubit=d.qubit(b))
                d.add_edge(v, w, EdgeType.HADAMARD)
                d.add_edge(w, b, toggle(et))
            active.append(q)
        return active

    def remove_gadget(self, active: list[int]) -> bool:
        d = self.d
        gadgets = {}
        for v in d.vertices():
            if v in self.inputs or d.is_boundary(v) or d.degree(v) != 1:
                continue
            hub = d.neighbors(v)[0]
            if not d.is_boundary(hub) and hub not in gadgets:
                gadgets[hub] = v
        if not gadgets:
            return False
        front = {self.frontier[q]: q for q in active}
        options = []
        for q in active:
            v = self.frontier[q]
            for w in self.neighbors(v):
                if w in gadgets and rules.pivot_candidate(d, w, v) is not None:
                    cost = sum(1 for x in d.neighbors(w) if x in front) - 1
                    options.append((cost, q, v, w))
                    if self.strategy == "naive":
                        break
            if options and self.strategy == "naive":
                break
        if not options:
            return False
        if self.strategy == "naive":
            _, q, v, w = options[0]
        else:
            _, q, v, w = min(options, key=lambda o: (o[0], o[1]))
        log.debug("extract: pivot gadget hub %d with frontier %d (qubit %d)", w, v, q)
        rules.pivot(d, w, v)
        self.frontier[q] = w
        return True

    def gauss_step(self, active: list[int]) -> None:
        d = self.d
        rows = [self.frontier[q] for q in active]
        cols: list[int] = []
        seen = set()
        for v in rows:
            for w in self.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    cols.append(w)
        m = BooleanMatrix.from_lists([[int(d.connected(v, w)) for w in cols] for v in rows])
        if not any(bin(m.row_bits(r)).count("1") == 1 for r in range(m.n_rows)):
            _, trace = gaussian_elimination(m, full=True)
            for kind, a, b in trace.steps:
                if kind == "swap":
                    # row swaps are bookkeeping only; the diagram rows stay put
                    rows[a], rows[b] = rows[b], rows[a]
                    active[a], active[b] = active[b], active[a]
                    m.swap_rows(a, b)
                    continue
                # row[b] ^= row[a]  <->  CX with control on qubit b, target on qubit a
                src, tgt = rows[a], rows[b]
                for k, w in enumerate(cols):
                    if m[a, k]:
                        if d.connected(tgt, w):
                            d.remove_edge(tgt, w)
                        else:
                            d.add_edge(tgt, w, EdgeType.HADAMARD)
                m.add_row(a, b)
                self.emit(CX(active[b], active[a]))
        used = set()
        progressed = False
        for r, q in enumerate(active):
            bits = m.row_bits(r)
            if bin(bits).count("1") != 1:
                continue
            w = cols[bits.bit_length() - 1]
            if w in used or w in self.inputs:
                continue
            used.add(w)
            v = self.frontier[q]
            o = d.outputs[q]
            d.remove_vertex(v)
            d.add_edge(w, o, EdgeType.HADAMARD)
            self.frontier[q] = w
            progressed = True
        if not progressed:
            raise self.fail("no extractable frontier vertex after elimination")

    def finish(self) -> QuantumCircuit:
        d = self.d
        # input qubit p reaches output wire q
        source: dict[int, int] = {}
        prefix: list[Gate] = []
        index = {b: p for p, b in enumerate(d.inputs)}
        for q, o in enumerate(d.outputs):
            (v, et), = d.incident(o).items()
            if v in self.inputs:
                b, et_in = v, et
            else:
                nbrs = self.neighbors(v)
                if len(nbrs) != 1 or nbrs[0] not in self.inputs:
                    raise self.fail("leftover structure behind the frontier")
                b = nbrs[0]
                et_in = d.edge_type(v, b)
                if et != EdgeType.SIMPLE or not d.phase(v).is_zero():
                    raise self.fail("unclean frontier at finish")
            p = index[b]
            source[q] = p
            if et_in == EdgeType.HADAMARD:
                prefix.append(H(p))
        if sorted(source.values()) != list(range(self.n)):
            raise self.fail("outputs do not form a permutation of inputs")
        where = list(range(self.n))  # where[p] = wire holding input p
        holder = list(range(self.n))  # holder[wire] = input on that wire
        for q in range(self.n):
            p = source[q]
            pos = where[p]
            if pos != q:
                prefix.append(SWAP(q, pos))
                other = holder[q]
                holder[q], holder[pos] = p, other
                where[p], where[other] = q, pos
        remaining = [v for v in d.spiders()]
        frontier_vertices = set(self.frontier.values())
        if any(v not in frontier_vertices for v in remaining):
            raise self.fail("spiders left unextracted")
        return QuantumCircuit(self.n, _cancel_pairs(prefix + self.rev[::-1]))

    def run(self, max_iterations: int = 100_000) -> QuantumCircuit:
        for _ in range(max_iterations):
            self.clean_frontier()
            active = self.separate_inputs()
            if not active:
                return self.finish()
            if self.remove_gadget(active):
                continue
            self.gauss_step(active)
        raise self.fail("extraction did not terminate")


_SELF_INVERSE = frozenset({"h", "x", "z", "cx", "cz", "swap"})


def _cancel_pairs(gates: list[Gate]) -> list[Gate]:
    """Drop adjacent equal self-inverse gates (e.g. the H H left between frontier steps)."""
    out: list[Gate | None] = []
    last: dict[int, int] = {}
    for g in gates:
        prev = {last.get(q) for q in g.qubits}
        if g.kind in _SELF_INVERSE and len(prev) == 1:
            (i,) = prev
            if i is not None and out[i] == g:
                out[i] = None
                for q in g.qubits:
                    del last[q]
                # restore each wire's previous live gate
                for q in g.qubits:
                    for j in range(i - 1, -1, -1):
                        if out[j] is not None and q in out[j].qubits:
                            last[q] = j
                            break
                continue
        out.append(g)
        for q in g.qubits:
            last[q] = len(out) - 1
    return [g for g in out if g is not None]


def extract_circuit(d: ZXDiagram, strategy: GadgetStrategy = "best") -> QuantumCircuit:
    """Extract a circuit from a graph-like diagram of a unitary.

    ``strategy`` selects the gadget-removal pivot: ``naive`` takes the first
    hub found, ``greedy`` the hub with the fewest other frontier neighbors,
    and ``best`` runs both and keeps the result with fewer CZ gates.
    """
    if not d.is_graph_like():
        raise ValueError(f"extraction needs a graph-like diagram: {d.certificate()}")
    if strategy == "best":
        greedy = _Extractor(d, "greedy").run()
        naive = _Extractor(d, "naive").run()
        return greedy if cz_count(greedy) <= cz_count(naive) else naive
    return _Extractor(d, strategy).run()


def cz_count(c: QuantumCircuit) -> int:
    return sum(1 for g in c.gates if g.kind == "cz")
