"""Circuit to ZX-diagram translation."""

from __future__ import annotations

from itertools import combinations

from ..circuit.core import QuantumCircuit
from ..circuit.gates import rotation_angle
from ..circuit.phase import PI, Phase
from .diagram import EdgeType, VertexType, ZXDiagram


class _Builder:
    def __init__(self, n: int):
        self.d = ZXDiagram()
        self.last: list[int] = []
        self.pending_h = [False] * n
        for q in range(n):
            b = self.d.add_vertex(VertexType.BOUNDARY, qubit=q)
            self.d.inputs.append(b)
            self.last.append(b)

    def attach(self, q: int, vtype: VertexType, phase: Phase | None = None) -> int:
        v = self.d.add_vertex(vtype, phase, qubit=q)
        et = EdgeType.HADAMARD if self.pending_h[q] else EdgeType.SIMPLE
        self.d.add_edge(self.last[q], v, et)
        self.pending_h[q] = False
        self.last[q] = v
        return v

    def finish(self) -> ZXDiagram:
        for q, v in enumerate(self.last):
            b = self.d.add_vertex(VertexType.BOUNDARY, qubit=q)
            et = EdgeType.HADAMARD if self.pending_h[q] else EdgeType.SIMPLE
            self.d.add_edge(v, b, et)
            self.d.outputs.append(b)
        return self.d


def _multi_controlled_z(b: _Builder, qubits: tuple[int, ...]) -> None:
    """Phase-gadget form: one wire spider per qubit plus one gadget per larger parity."""
    m = len(qubits)
    wires = {q: b.attach(q, VertexType.Z, Phase(1, 2 ** (m - 1))) for q in qubits}
    for size in range(2, m + 1):
        sign = 1 if size % 2 else -1
        for subset in combinations(qubits, size):
            hub = b.d.add_vertex(VertexType.Z)
            leaf = b.d.add_vertex(VertexType.Z, Phase(sign, 2 ** (m - 1)))
            b.d.add_edge(hub, leaf, EdgeType.HADAMARD)
            for q in subset:
                b.d.add_edge(hub, wires[q], EdgeType.HADAMARD)


def from_circuit(c: QuantumCircuit) -> ZXDiagram:
    b = _Builder(c.n_qubits)
    for g in c.gates:
        k = g.kind
        if k == "h":
            q = g.qubits[0]
            b.pending_h[q] = not b.pending_h[q]
        elif g.spec.axis is not None and len(g.qubits) == 1:
            vtype = VertexType.Z if g.spec.axis == "z" else VertexType.X
            b.attach(g.qubits[0], vtype, rotation_angle(g))
        elif k == "y":
            q = g.qubits[0]
            b.attach(q, VertexType.Z, PI)
            b.attach(q, VertexType.X, PI)
        elif k == "cx":
            ctrl, tgt = g.qubits
            vc = b.attach(ctrl, VertexType.Z)
            vt = b.attach(tgt, VertexType.X)
            b.d.add_edge(vc, vt, EdgeType.SIMPLE)
        elif k == "cz":
            x, y = g.qubits
            vx = b.attach(x, VertexType.Z)
            vy = b.attach(y, VertexType.Z)
            b.d.add_edge(vx, vy, EdgeType.HADAMARD)
        elif k == "swap":
            x, y = g.qubits
            b.last[x], b.last[y] = b.last[y], b.last[x]
            b.pending_h[x], b.pending_h[y] = b.pending_h[y], b.pending_h[x]
        elif k == "ccz":
            _multi_controlled_z(b, g.qubits)
        elif k in ("ccx", "mcx"):
            t = g.qubits[-1]
            if len(g.qubits) == 2:
                vc = b.attach(g.qubits[0], VertexType.Z)
                vt = b.attach(t, VertexType.X)
                b.d.add_edge(vc, vt, EdgeType.SIMPLE)
                continue
            b.pending_h[t] = not b.pending_h[t]
            _multi_controlled_z(b, g.qubits)
            b.pending_h[t] = not b.pending_h[t]
        else:
            raise ValueError(f"gate kind {k!r} cannot be converted to a ZX-diagram")
    return b.finish()
