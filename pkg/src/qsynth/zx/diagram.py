"""Open ZX-diagram graph with phased spiders and simple/Hadamard edges."""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Iterator

from ..circuit.phase import PI, Phase


class VertexType(IntEnum):
    BOUNDARY = 0
    Z = 1
    X = 2


class EdgeType(IntEnum):
    SIMPLE = 1
    HADAMARD = 2


def toggle(et: EdgeType) -> EdgeType:
    return EdgeType.HADAMARD if et == EdgeType.SIMPLE else EdgeType.SIMPLE


@dataclass(frozen=True)
class GraphLikeCertificate:
    only_z_spiders: bool
    only_hadamard_internal_edges: bool
    boundaries_simple: bool

    def __bool__(self) -> bool:
        return self.only_z_spiders and self.only_hadamard_internal_edges and self.boundaries_simple


class ZXDiagram:
    """Vertex ids are allocated monotonically; traversal follows insertion order."""

    def __init__(self):
        self._adj: dict[int, dict[int, EdgeType]] = {}
        self._type: dict[int, VertexType] = {}
        self._phase: dict[int, Phase] = {}
        self._qubit: dict[int, int | None] = {}
        self._next = 0
        self.inputs: list[int] = []
        self.outputs: list[int] = []

    # vertices

    def add_vertex(self, vtype: VertexType, phase: Phase | None = None, qubit: int | None = None,
                   vid: int | None = None) -> int:
        if vid is None:
            vid = self._next
        elif vid in self._adj:
            raise ValueError(f"vertex {vid} already exists")
        self._next = max(self._next, vid + 1)
        self._adj[vid] = {}
        self._type[vid] = VertexType(vtype)
        self._phase[vid] = phase if phase is not None else Phase(0)
        self._qubit[vid] = qubit
        return vid

    def remove_vertex(self, v: int) -> None:
        if v in self.inputs or v in self.outputs:
            raise ValueError(f"cannot remove boundary vertex {v}")
        for w in list(self._adj[v]):
            del self._adj[w][v]
        del self._adj[v], self._type[v], self._phase[v], self._qubit[v]

    def vertices(self) -> list[int]:
        return list(self._adj)

    def __contains__(self, v: int) -> bool:
        return v in self._adj

    def num_vertices(self) -> int:
        return len(self._adj)

    def type(self, v: int) -> VertexType:
        return self._type[v]

    def set_type(self, v: int, t: VertexType) -> None:
        self._type[v] = t

    def phase(self, v: int) -> Phase:
        return self._phase[v]

    def set_phase(self, v: int, p: Phase) -> None:
        self._phase[v] = p

    def add_to_phase(self, v: int, p: Phase) -> None:
        self._phase[v] = self._phase[v] + p

    def qubit(self, v: int) -> int | None:
        return self._qubit[v]

    def set_qubit(self, v: int, q: int | None) -> None:
        self._qubit[v] = q

    def is_boundary(self, v: int) -> bool:
        return self._type[v] == VertexType.BOUNDARY

    # edges

    def neighbors(self, v: int) -> list[int]:
        return list(self._adj[v])

    def incident(self, v: int) -> dict[int, EdgeType]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def connected(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edge_type(self, u: int, v: int) -> EdgeType:
        return self._adj[u][v]

    def set_edge_type(self, u: int, v: int, et: EdgeType) -> None:
        if v not in self._adj[u]:
            raise KeyError(f"no edge {u}-{v}")
        self._adj[u][v] = et
        self._adj[v][u] = et

    def add_edge(self, u: int, v: int, et: EdgeType = EdgeType.SIMPLE) -> None:
        """Add an edge between two unconnected, distinct vertices."""
        if u == v:
            raise ValueError("self-loops must go through add_edge_smart")
        if v in self._adj[u]:
            raise ValueError(f"edge {u}-{v} already exists")
        self._adj[u][v] = et
        self._adj[v][u] = et

    def remove_edge(self, u: int, v: int) -> None:
        del self._adj[u][v]
        del self._adj[v][u]

    def add_edge_smart(self, u: int, v: int, et: EdgeType) -> None:
        """Add an edge, resolving self-loops and parallel edges between Z spiders.

        A Hadamard self-loop adds pi to the phase; a simple one is dropped.
        Two Hadamard edges cancel; two simple edges are one; a simple edge
        alongside a Hadamard edge leaves a simple edge and adds pi.
        """
        if u == v:
            if et == EdgeType.HADAMARD:
                self.add_to_phase(u, PI)
            return
        existing = self._adj[u].get(v)
        if existing is None:
            self.add_edge(u, v, et)
            return
        if self._type[u] != VertexType.Z or self._type[v] != VertexType.Z:
            raise ValueError(f"parallel edge between non-Z vertices {u}, {v}")
        if existing == EdgeType.HADAMARD and et == EdgeType.HADAMARD:
            self.remove_edge(u, v)
        elif existing == EdgeType.SIMPLE and et == EdgeType.SIMPLE:
            pass
        else:
            self.set_edge_type(u, v, EdgeType.SIMPLE)
            self.add_to_phase(u, PI)

    def toggle_edge(self, u: int, v: int) -> None:
        """Flip the presence of a Hadamard edge between two Z spiders."""
        if v in self._adj[u]:
            if self._adj[u][v] != EdgeType.HADAMARD:
                raise ValueError(f"toggle_edge on non-Hadamard edge {u}-{v}")
            self.remove_edge(u, v)
        else:
            self.add_edge(u, v, EdgeType.HADAMARD)

    def edges(self) -> Iterator[tuple[int, int, EdgeType]]:
        seen = set()
        for u, nbrs in self._adj.items():
            seen.add(u)
            for v, et in nbrs.items():
                if v not in seen:
                    yield u, v, et

    def num_edges(self) -> int:
        return sum(len(n) for n in self._adj.values()) // 2

    # summaries

    def spiders(self) -> list[int]:
        return [v for v in self._adj if self._type[v] != VertexType.BOUNDARY]

    def non_clifford_count(self) -> int:
        return sum(1 for v in self.spiders() if not self._phase[v].is_clifford())

    def t_count(self) -> int:
        return sum(1 for v in self.spiders() if self._phase[v].is_t_like())

    def certificate(self) -> GraphLikeCertificate:
        only_z = all(t != VertexType.X for t in self._type.values())
        internal_h = True
        boundary_simple = True
        for u, v, et in self.edges():
            if self.is_boundary(u) or self.is_boundary(v):
                boundary_simple &= et == EdgeType.SIMPLE
            else:
                internal_h &= et == EdgeType.HADAMARD
        return GraphLikeCertificate(only_z, internal_h, boundary_simple)

    def is_graph_like(self) -> bool:
        return bool(self.certificate())

    def copy(self) -> ZXDiagram:
        d = ZXDiagram()
        d._adj = {v: dict(n) for v, n in self._adj.items()}
        d._type = dict(self._type)
        d._phase = dict(self._phase)
        d._qubit = dict(self._qubit)
        d._next = self._next
        d.inputs = list(self.inputs)
        d.outputs = list(self.outputs)
        return d

    def adjoint(self) -> ZXDiagram:
        d = self.copy()
        for v in d.spiders():
            d._phase[v] = -d._phase[v]
        d.inputs, d.outputs = d.outputs, d.inputs
        return d

    def __repr__(self) -> str:
        return (f"ZXDiagram({self.num_vertices()} vertices, {self.num_edges()} edges, "
                f"{len(self.inputs)} inputs, {len(self.outputs)} outputs)")
