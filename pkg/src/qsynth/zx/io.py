"""Line-based text dump of ZX-diagrams (format ``zx-v1``)."""

from __future__ import annotations

from ..circuit.phase import Phase
from .diagram import EdgeType, VertexType, ZXDiagram

HEADER = "zx-v1"
_KIND = {VertexType.BOUNDARY: "B", VertexType.Z: "Z", VertexType.X: "X"}
_KIND_INV = {v: k for k, v in _KIND.items()}
_EDGE = {EdgeType.SIMPLE: "S", EdgeType.HADAMARD: "H"}
_EDGE_INV = {v: k for k, v in _EDGE.items()}


def write_zx(d: ZXDiagram) -> str:
    lines = [HEADER,
             "inputs " + " ".join(map(str, d.inputs)),
             "outputs " + " ".join(map(str, d.outputs))]
    for v in d.vertices():
        line = f"{v} {_KIND[d.type(v)]} {d.phase(v).qasm()}"
        if d.qubit(v) is not None:
            line += f" q={d.qubit(v)}"
        lines.append(line)
    for u, v, et in d.edges():
        lines.append(f"{u} {v} {_EDGE[et]}")
    return "\n".join(lines) + "\n"


def parse_zx(text: str) -> ZXDiagram:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [(i + 1, ln) for i, ln in enumerate(lines) if ln]
    if not lines or lines[0][1] != HEADER:
        raise ValueError(f"missing '{HEADER}' header")
    d = ZXDiagram()
    inputs: list[int] = []
    outputs: list[int] = []
    edges = []
    for lineno, ln in lines[1:]:
        parts = ln.split()
        try:
            if parts[0] in ("inputs", "outputs"):
                (inputs if parts[0] == "inputs" else outputs).extend(int(x) for x in parts[1:])
            elif parts[1] in _KIND_INV:
                qubit = None
                if len(parts) == 4 and parts[3].startswith("q="):
                    qubit = int(parts[3][2:])
                elif len(parts) != 3:
                    raise ValueError("expected 'id kind phase [q=N]'")
                d.add_vertex(_KIND_INV[parts[1]], Phase.parse(parts[2]), qubit=qubit, vid=int(parts[0]))
            elif len(parts) == 3 and parts[2] in _EDGE_INV:
                edges.append((int(parts[0]), int(parts[1]), _EDGE_INV[parts[2]]))
            else:
                raise ValueError(f"unrecognized line {ln!r}")
        except (ValueError, IndexError) as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    for u, v, et in edges:
        if u not in d or v not in d:
            raise ValueError(f"edge {u}-{v} references an unknown vertex")
        d.add_edge(u, v, et)
    for b in inputs + outputs:
        if b not in d or not d.is_boundary(b):
            raise ValueError(f"boundary list names non-boundary vertex {b}")
    for v in d.vertices():
        if d.is_boundary(v) and d.degree(v) != 1:
            raise ValueError(f"boundary vertex {v} must have degree 1")
    d.inputs, d.outputs = inputs, outputs
    return d
