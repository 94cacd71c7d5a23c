"""SWAP-insertion routing of circuits onto a coupling graph."""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Literal

from ..circuit.core import QuantumCircuit, critical_path, gate_weight, statistics
from ..circuit.gates import SWAP, Gate
from .topology import Device

log = logging.getLogger(__name__)

Objective = Literal["swaps", "depth"]
Scheduler = Literal["heuristic", "search"]


class RoutingError(ValueError):
    pass


@dataclass
class Placement:
    logical_to_physical: list[int]
    n_physical: int
    physical_to_logical: dict[int, int] = field(init=False)

    def __post_init__(self):
        l2p = self.logical_to_physical
        if len(set(l2p)) != len(l2p) or any(not 0 <= p < self.n_physical for p in l2p):
            raise ValueError(f"placement {l2p} is not injective into {self.n_physical} qubits")
        self.physical_to_logical = {p: q for q, p in enumerate(l2p)}

    @classmethod
    def identity(cls, n_logical: int, n_physical: int) -> Placement:
        return cls(list(range(n_logical)), n_physical)

    def copy(self) -> Placement:
        return Placement(list(self.logical_to_physical), self.n_physical)

    def physical(self, q: int) -> int:
        return self.logical_to_physical[q]

    def swap_physical(self, a: int, b: int) -> None:
        la = self.physical_to_logical.pop(a, None)
        lb = self.physical_to_logical.pop(b, None)
        if la is not None:
            self.logical_to_physical[la] = b
            self.physical_to_logical[b] = la
        if lb is not None:
            self.logical_to_physical[lb] = a
            self.physical_to_logical[a] = lb

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Placement):
            return NotImplemented
        return self.logical_to_physical == other.logical_to_physical and self.n_physical == other.n_physical


@dataclass
class RoutingResult:
    mapped_circuit: QuantumCircuit
    initial_placement: Placement
    final_placement: Placement
    swap_count: int
    mapped_depth: int
    mapped_delay: int
    # indices into mapped_circuit.gates of the SWAPs added by the router
    inserted_swaps: list[int] = field(default_factory=list)

    def summary(self) -> str:
        return (f"swaps {self.swap_count}, depth {self.mapped_depth}, delay {self.mapped_delay}, "
                f"placement {self.initial_placement.logical_to_physical} -> "
                f"{self.final_placement.logical_to_physical}")


def greedy_placement(c: QuantumCircuit, d: Device) -> Placement:
    """Put strongly interacting logical pairs on nearby physical qubits."""
    weight: Counter[tuple[int, int]] = Counter()
    for g in c.gates:
        if len(g.qubits) == 2:
            a, b = sorted(g.qubits)
            weight[(a, b)] += 1
    degree = Counter()
    for (a, b), w in weight.items():
        degree[a] += w
        degree[b] += w
    order = sorted(range(c.n_qubits), key=lambda q: (-degree[q], q))
    l2p: dict[int, int] = {}
    free = set(range(d.n_physical))
    for q in order:
        def cost(p: int) -> tuple[int, int, int]:
            s = 0
            for r, pr in l2p.items():
                w = weight[(min(q, r), max(q, r))]
                s += w * d.distance(p, pr)
            return (s, -len(d.neighbors(p)), p)
        best = min(free, key=cost)
        l2p[q] = best
        free.discard(best)
    return Placement([l2p[q] for q in range(c.n_qubits)], d.n_physical)


class _State:
    """Routing progress: placement, executed gates and emitted physical gates."""

    def __init__(self, c: QuantumCircuit, d: Device, placement: Placement, swap_weight: int):
        self.c = c
        self.d = d
        self.placement = placement
        self.swap_weight = swap_weight
        self.next_on_qubit = [0] * c.n_qubits
        self.queues: list[list[int]] = [[] for _ in range(c.n_qubits)]
        for i, g in enumerate(c.gates):
            for q in g.qubits:
                self.queues[q].append(i)
        self.done = [False] * len(c.gates)
        self.n_done = 0
        self.emitted: list[Gate] = []
        self.inserted: list[int] = []
        self.avail = [0] * d.n_physical

    def clone(self) -> _State:
        s = object.__new__(_State)
        s.c, s.d, s.swap_weight = self.c, self.d, self.swap_weight
        s.placement = self.placement.copy()
        s.next_on_qubit = list(self.next_on_qubit)
        s.queues = self.queues
        s.done = list(self.done)
        s.n_done = self.n_done
        s.emitted = list(self.emitted)
        s.inserted = list(self.inserted)
        s.avail = list(self.avail)
        return s

    def finished(self) -> bool:
        return self.n_done == len(self.c.gates)

    def frontier(self) -> list[int]:
        out = set()
        for q in range(self.c.n_qubits):
            k = self.next_on_qubit[q]
            if k < len(self.queues[q]):
                i = self.queues[q][k]
                g = self.c.gates[i]
                if all(self.queues[r][self.next_on_qubit[r]] == i for r in g.qubits):
                    out.add(i)
        return sorted(out)

    def phys(self, g: Gate) -> tuple[int, ...]:
        return tuple(self.placement.physical(q) for q in g.qubits)

    def executable(self, i: int) -> bool:
        g = self.c.gates[i]
        if len(g.qubits) == 1:
            return True
        a, b = self.phys(g)
        return self.d.adjacent(a, b)

    def _emit(self, g: Gate) -> None:
        w = gate_weight(g, self.swap_weight)
        t = max(self.avail[p] for p in g.qubits) + w
        for p in g.qubits:
            self.avail[p] = t
        self.emitted.append(g)

    def run_executable(self) -> int:
        """Execute ready gates, always the lowest-index one first, so unblocked input order is kept."""
        count = 0
        while True:
            i = next((i for i in self.frontier() if self.executable(i)), None)
            if i is None:
                return count
            g = self.c.gates[i]
            self._emit(Gate(g.kind, self.phys(g), g.param))
            for q in g.qubits:
                self.next_on_qubit[q] += 1
            self.done[i] = True
            self.n_done += 1
            count += 1

    def swap(self, a: int, b: int) -> None:
        self.inserted.append(len(self.emitted))
        self._emit(SWAP(min(a, b), max(a, b)))
        self.placement.swap_physical(a, b)

    def blocked(self) -> list[int]:
        return [i for i in self.frontier() if not self.executable(i)]

    def gate_distance(self, i: int) -> int:
        a, b = self.phys(self.c.gates[i])
        return self.d.distance(a, b)

    def frontier_distance(self) -> int:
        return sum(self.gate_distance(i) - 1 for i in self.blocked())

    def candidate_swaps(self) -> list[tuple[int, int]]:
        """First SWAP steps along shortest paths of every blocked gate."""
        cands = set()
        for i in self.blocked():
            a, b = self.phys(self.c.gates[i])
            for u, v in ((a, b), (b, a)):
                for w in self.d.neighbors(u):
                    if self.d.distance(w, v) < self.d.distance(u, v):
                        cands.add((min(u, w), max(u, w)))
        return sorted(cands)

    def makespan(self) -> int:
        return max(self.avail, default=0)


def _choose_swaps_objective(s: _State) -> tuple[int, int]:
    blocked = s.blocked()
    i = min(blocked, key=lambda j: (s.gate_distance(j), j))
    a, b = s.phys(s.c.gates[i])
    return a, s.d.next_hop(a, b)


def _choose_depth_objective(s: _State) -> tuple[int, int]:
    best = None
    for i in s.blocked():
        a, b = s.phys(s.c.gates[i])
        dist = s.d.distance(a, b)
        for u, v in ((a, b), (b, a)):
            for w in s.d.neighbors(u):
                if s.d.distance(w, v) >= dist:
                    continue
                start = max(s.avail[u], s.avail[w])
                finish = start + s.swap_weight
                # remaining hops are at least dist - 2 more swaps
                est = max(finish, s.avail[v]) + s.swap_weight * (dist - 2) + 2
                key = (est, dist, i, min(u, w), max(u, w))
                if best is None or key < best[0]:
                    best = (key, (u, w))
    assert best is not None
    return best[1]


def _score(s: _State, objective: Objective) -> tuple:
    cost = s.makespan() if objective == "depth" else len(s.inserted)
    return (-s.n_done, s.frontier_distance(), cost)


def _choose_search(s: _State, objective: Objective, width: int, depth: int) -> tuple[int, int]:
    beam: list[tuple[tuple, _State, tuple[int, int] | None]] = [((), s, None)]
    best: tuple[tuple, tuple[int, int]] | None = None
    for level in range(depth):
        expanded = []
        for _, st, first in beam:
            if st.finished():
                continue
            for a, b in st.candidate_swaps():
                nxt = st.clone()
                nxt.swap(a, b)
                nxt.run_executable()
                root = first if first is not None else (a, b)
                expanded.append((_score(nxt, objective) + (root,), nxt, root))
        if not expanded:
            break
        expanded.sort(key=lambda e: e[0])
        beam = expanded[:width]
        if best is None or beam[0][0] < best[0]:
            best = (beam[0][0], beam[0][2])
    assert best is not None
    return best[1]


def route(c: QuantumCircuit, d: Device, objective: Objective = "swaps",
          scheduler: Scheduler = "heuristic", placement: Placement | str | None = None,
          beam_width: int = 4, beam_depth: int = 2, decompose_swaps: bool = False) -> RoutingResult:
    """Map ``c`` onto ``d``, inserting SWAPs so every two-qubit gate sits on an edge.

    ``decompose_swaps`` only changes the reported delay (a SWAP then weighs
    three CX gates).
    """
    if objective not in ("swaps", "depth"):
        raise ValueError(f"unknown objective {objective!r}")
    if scheduler not in ("heuristic", "search"):
        raise ValueError(f"unknown scheduler {scheduler!r}")
    if c.n_qubits > d.n_physical:
        raise RoutingError(f"circuit has {c.n_qubits} qubits but device {d.name} has {d.n_physical}")
    for g in c.gates:
        if len(g.qubits) > 2:
            raise RoutingError(f"gate {g} acts on {len(g.qubits)} qubits; decompose it first")
    if placement is None or placement == "identity":
        start = Placement.identity(c.n_qubits, d.n_physical)
    elif placement == "greedy":
        start = greedy_placement(c, d)
    elif isinstance(placement, Placement):
        start = placement.copy()
    else:
        raise ValueError(f"unknown placement {placement!r}")
    swap_weight = 2
    s = _State(c, d, start.copy(), swap_weight)
    s.run_executable()
    stall = 0
    best_dist = None
    while not s.finished():
        if scheduler == "search" and stall <= 2 * d.n_physical:
            a, b = _choose_search(s, objective, beam_width, beam_depth)
        elif objective == "depth" and stall <= 2 * d.n_physical:
            a, b = _choose_depth_objective(s)
        else:
            a, b = _choose_swaps_objective(s)
        s.swap(a, b)
        done_now = s.run_executable()
        dist = s.frontier_distance()
        if done_now or best_dist is None or dist < best_dist:
            stall = 0
            best_dist = None if done_now else dist
        else:
            stall += 1
    mapped = QuantumCircuit(d.n_physical, s.emitted, c.name)
    weights = [gate_weight(g, 6 if decompose_swaps else swap_weight) for g in mapped.gates]
    result = RoutingResult(
        mapped_circuit=mapped,
        initial_placement=start,
        final_placement=s.placement,
        swap_count=len(s.inserted),
        mapped_depth=statistics(mapped).depth,
        mapped_delay=critical_path(mapped, weights),
        inserted_swaps=s.inserted,
    )
    log.debug("route %s on %s: %s", c.name or "circuit", d.name, result.summary())
    return result


def validate_mapping(r: RoutingResult, d: Device) -> bool:
    """Check edge adjacency of two-qubit gates and the placement replay."""
    inserted = set(r.inserted_swaps)
    p = r.initial_placement.copy()
    for i, g in enumerate(r.mapped_circuit.gates):
        if any(not 0 <= q < d.n_physical for q in g.qubits):
            return False
        if len(g.qubits) == 2 and not d.adjacent(*g.qubits):
            return False
        if len(g.qubits) > 2:
            return False
        if i in inserted:
            if g.kind != "swap":
                return False
            p.swap_physical(*g.qubits)
    return p == r.final_placement


def unmap(r: RoutingResult) -> QuantumCircuit:
    """Pull the mapped circuit back to logical qubits, treating inserted SWAPs as relabelings."""
    p = r.initial_placement.copy()
    n = len(p.logical_to_physical)
    inserted = set(r.inserted_swaps)
    gates = []
    for i, g in enumerate(r.mapped_circuit.gates):
        if i in inserted:
            p.swap_physical(*g.qubits)
            continue
        try:
            qubits = tuple(p.physical_to_logical[q] for q in g.qubits)
        except KeyError:
            raise RoutingError(f"gate {g} touches an unoccupied physical qubit") from None
        gates.append(Gate(g.kind, qubits, g.param))
    return QuantumCircuit(n, gates, r.mapped_circuit.name)


__all__ = [
    "Placement",
    "RoutingError",
    "RoutingResult",
    "greedy_placement",
    "route",
    "unmap",
    "validate_mapping",
]
