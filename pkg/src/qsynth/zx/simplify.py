"""Graph-like normal form and the full reduction strategy."""

from __future__ import annotations

import logging

from . import rules
from .diagram import EdgeType, VertexType, ZXDiagram

log = logging.getLogger(__name__)

DEFAULT_MAX_STEPS = 200_000


class IterationCapError(RuntimeError):
    pass


class _Budget:
    def __init__(self, max_steps: int):
        self.left = max_steps

    def spend(self) -> None:
        self.left -= 1
        if self.left < 0:
            raise IterationCapError("ZX simplification exceeded its iteration cap")


def spider_simp(d: ZXDiagram, budget: _Budget | None = None) -> int:
    count = 0
    changed = True
    while changed:
        changed = False
        for u in d.vertices():
            if u not in d or not rules.is_z(d, u):
                continue
            for v in d.neighbors(u):
                if rules.can_fuse(d, u, v):
                    rules.fuse(d, u, v)
                    if budget:
                        budget.spend()
                    count += 1
                    changed = True
                    break
    return count


def _fix_boundaries(d: ZXDiagram) -> None:
    """Make every boundary edge simple and give each spider at most one boundary."""
    for b in list(d.inputs) + list(d.outputs):
        (v, et), = d.incident(b).items()
        if d.is_boundary(v):
            if et == EdgeType.HADAMARD:
                d.remove_edge(b, v)
                z1 = d.add_vertex(VertexType.Z, qubit=d.qubit(b))
                z2 = d.add_vertex(VertexType.Z, qubit=d.qubit(v))
                d.add_edge(b, z1, EdgeType.SIMPLE)
                d.add_edge(z1, z2, EdgeType.HADAMARD)
                d.add_edge(z2, v, EdgeType.SIMPLE)
            continue
        first = rules.boundary_neighbors(d, v)[0]
        if et == EdgeType.SIMPLE and first == b:
            continue
        d.remove_edge(v, b)
        z = d.add_vertex(VertexType.Z, qubit=d.qubit(b))
        d.add_edge(z, b, EdgeType.SIMPLE)
        if et == EdgeType.HADAMARD:
            d.add_edge(v, z, EdgeType.HADAMARD)
        else:
            z2 = d.add_vertex(VertexType.Z, qubit=d.qubit(b))
            d.add_edge(v, z2, EdgeType.HADAMARD)
            d.add_edge(z2, z, EdgeType.HADAMARD)


def to_graph_like(d: ZXDiagram) -> ZXDiagram:
    """Return a graph-like copy of ``d`` with the same linear map."""
    d = d.copy()
    _make_graph_like(d)
    return d


def _make_graph_like(d: ZXDiagram) -> None:
    for v in d.vertices():
        if d.type(v) == VertexType.X:
            rules.color_change(d, v)
    spider_simp(d)
    _fix_boundaries(d)


def id_simp(d: ZXDiagram, budget: _Budget) -> int:
    count = 0
    for v in d.vertices():
        if v in d and rules.is_identity(d, v):
            a, b, et = rules.remove_identity(d, v)
            budget.spend()
            count += 1
            if et == EdgeType.SIMPLE and a in d and b in d and rules.can_fuse(d, a, b):
                rules.fuse(d, a, b)
    return count


def lcomp_simp(d: ZXDiagram, budget: _Budget) -> int:
    count = 0
    for v in d.vertices():
        if v in d and rules.can_lcomp(d, v):
            rules.lcomp(d, v)
            budget.spend()
            count += 1
    return count


def pivot_simp(d: ZXDiagram, budget: _Budget) -> int:
    count = 0
    for u in d.vertices():
        if u not in d:
            continue
        for v in d.neighbors(u):
            if v > u and rules.pivot_candidate(d, u, v) is not None:
                rules.pivot(d, u, v)
                budget.spend()
                count += 1
                break
    return count


def pivot_gadget_simp(d: ZXDiagram, budget: _Budget) -> int:
    count = 0
    for u in d.vertices():
        if u not in d:
            continue
        for v in d.neighbors(u):
            if rules.pivot_gadget_candidate(d, u, v):
                rules.pivot_gadget(d, u, v)
                budget.spend()
                count += 1
                break
    return count


def pivot_boundary_simp(d: ZXDiagram, budget: _Budget) -> int:
    count = 0
    for v in d.vertices():
        if v not in d:
            continue
        match = rules.pivot_boundary_candidate(d, v)
        if match is not None:
            rules.pivot_boundary(d, v, match[0])
            budget.spend()
            count += 1
    return count


def gadget_simp(d: ZXDiagram, budget: _Budget) -> int:
    count = 0
    while True:
        n = rules.merge_gadgets(d)
        if not n:
            return count
        budget.spend()
        count += n


def interior_clifford_simp(d: ZXDiagram, budget: _Budget) -> int:
    total = 0
    while True:
        n = id_simp(d, budget) + spider_simp(d, budget) + pivot_simp(d, budget) + lcomp_simp(d, budget)
        if not n:
            return total
        total += n


def clifford_simp(d: ZXDiagram, budget: _Budget) -> int:
    total = 0
    while True:
        total += interior_clifford_simp(d, budget)
        n = pivot_boundary_simp(d, budget)
        if not n:
            return total
        total += n


def two_qubit_estimate(d: ZXDiagram) -> int:
    """Internal Hadamard edges, a proxy for extracted two-qubit gates."""
    return sum(1 for u, v, et in d.edges()
               if et == EdgeType.HADAMARD and not d.is_boundary(u) and not d.is_boundary(v))


def full_reduce(d: ZXDiagram, early_stop: bool = False, max_steps: int = DEFAULT_MAX_STEPS) -> ZXDiagram:
    """Fixpoint of fusion, identity removal, lcomp, pivots and gadget rules."""
    d = d.copy()
    budget = _Budget(max_steps)
    _make_graph_like(d)
    interior_clifford_simp(d, budget)
    pivot_gadget_simp(d, budget)
    best = two_qubit_estimate(d)
    rounds = 0
    while True:
        rounds += 1
        clifford_simp(d, budget)
        i = gadget_simp(d, budget)
        interior_clifford_simp(d, budget)
        j = pivot_gadget_simp(d, budget)
        log.debug("full_reduce round %d: gadget fusions %d, gadget pivots %d, %d spiders",
                  rounds, i, j, len(d.spiders()))
        if not i and not j:
            break
        if early_stop:
            est = two_qubit_estimate(d)
            if est >= best:
                log.debug("full_reduce early stop at round %d (estimate %d)", rounds, est)
                clifford_simp(d, budget)
                break
            best = est
    _fix_boundaries(d)
    return d


def clifford_reduce(d: ZXDiagram, max_steps: int = DEFAULT_MAX_STEPS) -> ZXDiagram:
    """Clifford-only simplification (no gadget rules)."""
    d = d.copy()
    budget = _Budget(max_steps)
    _make_graph_like(d)
    clifford_simp(d, budget)
    _fix_boundaries(d)
    return d


__all__ = [
    "IterationCapError",
    "clifford_reduce",
    "full_reduce",
    "to_graph_like",
    "two_qubit_estimate",
]
