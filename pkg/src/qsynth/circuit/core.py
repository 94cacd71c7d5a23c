"""The gate-netlist circuit and its resource statistics."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .gates import Gate, is_clifford, rotation_angle


@dataclass
class QuantumCircuit:
    n_qubits: int
    gates: list[Gate] = field(default_factory=list)
    name: str = ""

    def __post_init__(self):
        if self.n_qubits < 0:
            raise ValueError("qubit count must be non-negative")
        gates, self.gates = self.gates, []
        for g in gates:
            self.append(g)

    def append(self, gate: Gate) -> QuantumCircuit:
        for q in gate.qubits:
            if not 0 <= q < self.n_qubits:
                raise ValueError(f"gate {gate} references qubit {q} outside 0..{self.n_qubits - 1}")
        self.gates.append(gate)
        return self

    def extend(self, gates: Iterable[Gate]) -> QuantumCircuit:
        for g in gates:
            self.append(g)
        return self

    def copy(self) -> QuantumCircuit:
        return QuantumCircuit(self.n_qubits, list(self.gates), self.name)

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self) -> Iterator[Gate]:
        return iter(self.gates)

    def __str__(self) -> str:
        lines = [f"QuantumCircuit({self.name or 'unnamed'}): {self.n_qubits} qubits, {len(self.gates)} gates"]
        lines += [f"  {i}: {g}" for i, g in enumerate(self.gates)]
        return "\n".join(lines)


def adjoint(c: QuantumCircuit) -> QuantumCircuit:
    return QuantumCircuit(c.n_qubits, [g.inverse() for g in reversed(c.gates)], c.name)


def compose(a: QuantumCircuit, b: QuantumCircuit) -> QuantumCircuit:
    """Gates of ``a`` followed by gates of ``b``."""
    if a.n_qubits != b.n_qubits:
        raise ValueError(f"cannot compose circuits on {a.n_qubits} and {b.n_qubits} qubits")
    return QuantumCircuit(a.n_qubits, a.gates + b.gates, a.name)


@dataclass(frozen=True)
class CircuitStats:
    gate_count: int
    t_count: int
    rz_count: int
    h_count: int
    two_qubit_count: int
    clifford_count: int
    depth: int
    delay: int

    def format(self) -> str:
        return "\n".join([
            f"gates:         {self.gate_count}",
            f"clifford:      {self.clifford_count}",
            f"h:             {self.h_count}",
            f"2-qubit:       {self.two_qubit_count}",
            f"t-count:       {self.t_count}",
            f"rz-count:      {self.rz_count}",
            f"depth:         {self.depth}",
            f"delay:         {self.delay}",
        ])


def gate_weight(g: Gate, swap_weight: int = 2) -> int:
    """Delay weight: single-qubit ops cost 1, multi-qubit ops cost 2."""
    if g.kind == "swap":
        return swap_weight
    return 1 if len(g.qubits) == 1 else 2


def critical_path(c: QuantumCircuit, weights: Iterable[int]) -> int:
    ready = [0] * c.n_qubits
    for g, w in zip(c.gates, weights):
        t = max((ready[q] for q in g.qubits), default=0) + w
        for q in g.qubits:
            ready[q] = t
    return max(ready, default=0)


def statistics(c: QuantumCircuit) -> CircuitStats:
    t_count = rz_count = h_count = two_q = cliff = 0
    for g in c.gates:
        angle = rotation_angle(g)
        if angle is not None and angle.is_t_like():
            t_count += 1
        if g.spec.axis == "z" and angle is not None and not angle.is_clifford():
            rz_count += 1
        if g.kind == "h":
            h_count += 1
        if len(g.qubits) == 2:
            two_q += 1
        if is_clifford(g):
            cliff += 1
    return CircuitStats(
        gate_count=len(c.gates),
        t_count=t_count,
        rz_count=rz_count,
        h_count=h_count,
        two_qubit_count=two_q,
        clifford_count=cliff,
        depth=critical_path(c, [1] * len(c.gates)),
        delay=critical_path(c, [gate_weight(g) for g in c.gates]),
    )
