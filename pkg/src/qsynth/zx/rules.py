"""Individual ZX rewrite rules on graph-like diagrams.

Every rule mutates the diagram in place and preserves its linear map up to
a nonzero scalar. Match predicates are separate so the simplifier can scan
deterministically.
"""

from __future__ import annotations

from ..circuit.phase import PI, Phase
from .diagram import EdgeType, VertexType, ZXDiagram, toggle


def is_z(d: ZXDiagram, v: int) -> bool:
    return d.type(v) == VertexType.Z


def boundary_neighbors(d: ZXDiagram, v: int) -> list[int]:
    return [w for w in d.neighbors(v) if d.is_boundary(w)]


def is_interior(d: ZXDiagram, v: int) -> bool:
    return is_z(d, v) and all(is_z(d, w) for w in d.neighbors(v))


# color change and fusion

def color_change(d: ZXDiagram, v: int) -> None:
    """Turn an X spider into a Z spider by toggling its incident edges."""
    if d.type(v) != VertexType.X:
        return
    d.set_type(v, VertexType.Z)
    for w, et in list(d.incident(v).items()):
        d.set_edge_type(v, w, toggle(et))


def can_fuse(d: ZXDiagram, u: int, v: int) -> bool:
    return (u != v and is_z(d, u) and is_z(d, v) and d.connected(u, v)
            and d.edge_type(u, v) == EdgeType.SIMPLE)


def fuse(d: ZXDiagram, u: int, v: int) -> None:
    """Merge Z spider ``v`` into ``u`` along a simple edge."""
    d.add_to_phase(u, d.phase(v))
    d.remove_edge(u, v)
    for w, et in list(d.incident(v).items()):
        d.remove_edge(v, w)
        d.add_edge_smart(u, w, et)
    d.remove_vertex(v)


# identity removal

def is_identity(d: ZXDiagram, v: int) -> bool:
    return is_z(d, v) and d.phase(v).is_zero() and d.degree(v) == 2


def remove_identity(d: ZXDiagram, v: int) -> tuple[int, int, EdgeType]:
    (a, ea), (b, eb) = d.incident(v).items()
    et = EdgeType.SIMPLE if ea == eb else EdgeType.HADAMARD
    d.remove_vertex(v)
    d.add_edge_smart(a, b, et)
    return a, b, et


# local complementation

def can_lcomp(d: ZXDiagram, v: int) -> bool:
    if not is_z(d, v) or d.phase(v) not in (Phase(1, 2), Phase(3, 2)):
        return False
    return all(is_z(d, w) and et == EdgeType.HADAMARD for w, et in d.incident(v).items())


def lcomp(d: ZXDiagram, v: int) -> None:
    """Remove a +-pi/2 interior spider, complementing its neighborhood."""
    p = d.phase(v)
    nbrs = d.neighbors(v)
    d.remove_vertex(v)
    for i, a in enumerate(nbrs):
        d.add_to_phase(a, -p)
        for b in nbrs[i + 1:]:
            d.toggle_edge(a, b)


# pivoting

def pivot_partition(d: ZXDiagram, u: int, v: int):
    """Classify non-boundary neighbors of the pair into (only u, only v, shared)."""
    nu = [w for w in d.neighbors(u) if w != v and not d.is_boundary(w)]
    nv = [w for w in d.neighbors(v) if w != u and not d.is_boundary(w)]
    sv = set(nv)
    su = set(nu)
    shared = [w for w in nu if w in sv]
    only_u = [w for w in nu if w not in sv]
    only_v = [w for w in nv if w not in su]
    return only_u, only_v, shared


def pivot_candidate(d: ZXDiagram, u: int, v: int) -> tuple[list[int], list[int]] | None:
    """Boundary neighbors of ``u`` and ``v`` if the edge admits a Pauli pivot."""
    if not (is_z(d, u) and is_z(d, v) and d.connected(u, v)):
        return None
    if d.edge_type(u, v) != EdgeType.HADAMARD:
        return None
    if not (d.phase(u).is_pauli() and d.phase(v).is_pauli()):
        return None
    bounds = []
    for x in (u, v):
        bx = []
        for w, et in d.incident(x).items():
            if d.is_boundary(w):
                bx.append(w)
            elif not is_z(d, w) or et != EdgeType.HADAMARD:
                return None
        bounds.append(bx)
    if len(bounds[0]) + len(bounds[1]) > 1:
        return None
    return bounds[0], bounds[1]


def pivot(d: ZXDiagram, u: int, v: int) -> None:
    """Pivot along the Hadamard edge ``u``-``v`` of two Pauli spiders.

    If one of them touches a boundary, that spider is removed and its
    boundary edge moves, type toggled, onto the other one.
    """
    only_u, only_v, shared = pivot_partition(d, u, v)
    pu, pv = d.phase(u), d.phase(v)
    bu = boundary_neighbors(d, u)
    bv = boundary_neighbors(d, v)
    if len(bu) + len(bv) > 1:
        raise ValueError("pivot with more than one boundary")
    for a in only_u:
        for b in only_v:
            d.toggle_edge(a, b)
        for c in shared:
            d.toggle_edge(a, c)
    for b in only_v:
        for c in shared:
            d.toggle_edge(b, c)
    for a in only_u:
        d.add_to_phase(a, pv)
    for b in only_v:
        d.add_to_phase(b, pu)
    for c in shared:
        d.add_to_phase(c, pu + pv + PI)
    if not bu and not bv:
        d.remove_vertex(u)
        d.remove_vertex(v)
        return
    keep, drop, bnd = (u, v, bv[0]) if bv else (v, u, bu[0])
    et = d.edge_type(drop, bnd)
    d.remove_vertex(drop)
    d.add_edge(keep, bnd, toggle(et))


def gadgetize(d: ZXDiagram, v: int) -> tuple[int, int]:
    """Move the phase of ``v`` onto a fresh gadget; returns (hub, leaf)."""
    hub = d.add_vertex(VertexType.Z, qubit=d.qubit(v))
    leaf = d.add_vertex(VertexType.Z, d.phase(v), qubit=d.qubit(v))
    d.set_phase(v, Phase(0))
    d.add_edge(v, hub, EdgeType.HADAMARD)
    d.add_edge(hub, leaf, EdgeType.HADAMARD)
    return hub, leaf


def is_leaf(d: ZXDiagram, v: int) -> bool:
    return is_z(d, v) and d.degree(v) == 1 and not d.is_boundary(d.neighbors(v)[0])


def pivot_gadget_candidate(d: ZXDiagram, u: int, v: int) -> bool:
    """``u`` interior Pauli, ``v`` interior non-Pauli, neither a gadget."""
    if not (is_z(d, u) and is_z(d, v) and d.connected(u, v)):
        return False
    if d.edge_type(u, v) != EdgeType.HADAMARD:
        return False
    if not d.phase(u).is_pauli() or d.phase(v).is_pauli():
        return False
    if d.degree(v) == 1:
        return False
    for x in (u, v):
        for w, et in d.incident(x).items():
            if not is_z(d, w) or et != EdgeType.HADAMARD:
                return False
    # u must not be a gadget hub
    return not any(d.degree(w) == 1 for w in d.neighbors(u) if w != v)


def pivot_gadget(d: ZXDiagram, u: int, v: int) -> None:
    gadgetize(d, v)
    pivot(d, u, v)


def pivot_boundary_candidate(d: ZXDiagram, v: int) -> tuple[int, int] | None:
    """An interior Pauli ``v`` next to a spider ``w`` that touches one boundary."""
    if not is_z(d, v) or not d.phase(v).is_pauli():
        return None
    choice = None
    for n, et in d.incident(v).items():
        if not is_z(d, n) or et != EdgeType.HADAMARD or d.degree(n) == 1:
            return None
    for n in d.neighbors(v):
        bounds = []
        ok = True
        for w, et in d.incident(n).items():
            if d.is_boundary(w):
                bounds.append(w)
            elif not is_z(d, w) or et != EdgeType.HADAMARD:
                ok = False
        if len(bounds) != 1 or not ok:
            continue
        if d.phase(n).denominator == 2:
            return n, bounds[0]
        if choice is None:
            choice = (n, bounds[0])
    return choice


def pivot_boundary(d: ZXDiagram, v: int, w: int) -> None:
    """Pivot interior Pauli ``v`` with boundary spider ``w`` after gadgetizing ``w``."""
    gadgetize(d, w)
    pivot(d, v, w)


# phase gadgets

def find_gadgets(d: ZXDiagram) -> dict[int, int]:
    """Map hub -> leaf for every non-Clifford phase gadget."""
    gadgets: dict[int, int] = {}
    for v in d.vertices():
        if not is_z(d, v) or d.degree(v) != 1:
            continue
        if d.phase(v).is_clifford():
            continue
        n = d.neighbors(v)[0]
        if not is_z(d, n) or not d.phase(n).is_pauli() or n in gadgets:
            continue
        if d.edge_type(v, n) != EdgeType.HADAMARD:
            continue
        if any(not is_z(d, w) for w in d.neighbors(n)):
            continue
        gadgets[n] = v
    return gadgets


def merge_gadgets(d: ZXDiagram) -> int:
    """Fuse gadgets acting on the same targets; returns the number of rewrites."""
    gadgets = find_gadgets(d)
    groups: dict[frozenset[int], list[int]] = {}
    for hub, leaf in gadgets.items():
        targets = frozenset(w for w in d.neighbors(hub) if w != leaf)
        groups.setdefault(targets, []).append(hub)
    count = 0
    for hubs in groups.values():
        if len(hubs) == 1:
            hub = hubs[0]
            if d.phase(hub) == PI:
                leaf = gadgets[hub]
                d.set_phase(leaf, -d.phase(leaf))
                d.set_phase(hub, Phase(0))
                count += 1
            continue
        total = Phase(0)
        for hub in hubs:
            p = d.phase(gadgets[hub])
            total = total + (p if d.phase(hub).is_zero() else -p)
        keep = hubs[0]
        d.set_phase(keep, Phase(0))
        d.set_phase(gadgets[keep], total)
        for hub in hubs[1:]:
            d.remove_vertex(gadgets[hub])
            d.remove_vertex(hub)
        count += 1
    return count
