"""Decomposition of multi-controlled gates into {H, CX, Z-rotations}."""

from __future__ import annotations

from itertools import combinations

from .core import QuantumCircuit
from .gates import CX, H, Gate, MULTI_CONTROL_KINDS, axis_gate
from .phase import Phase


def parity_terms(qubits: tuple[int, ...]) -> list[tuple[tuple[int, ...], Phase]]:
    """Parity expansion of the multi-controlled Z on ``qubits``.

    ``pi * x1 * ... * xm`` equals the sum over nonempty subsets ``S`` of
    ``(-1)^(|S|-1) * pi / 2^(m-1)`` times the parity of ``S``.
    """
    m = len(qubits)
    terms = []
    for size in range(1, m + 1):
        sign = 1 if size % 2 else -1
        for subset in combinations(qubits, size):
            terms.append((subset, Phase(sign, 2 ** (m - 1))))
    return terms


def parity_rotation(subset: tuple[int, ...], angle: Phase) -> list[Gate]:
    """``exp(i * angle * parity(subset))`` up to global phase, as a CX ladder."""
    target = subset[-1]
    ladder = [CX(q, target) for q in subset[:-1]]
    core = axis_gate("z", angle, target)
    return ladder + ([core] if core else []) + ladder[::-1]


def multi_controlled_z(qubits: tuple[int, ...]) -> list[Gate]:
    gates: list[Gate] = []
    for subset, angle in parity_terms(qubits):
        gates += parity_rotation(subset, angle)
    return gates


def decompose_gate(g: Gate) -> list[Gate]:
    if g.kind == "ccz":
        return multi_controlled_z(g.qubits)
    if g.kind in ("ccx", "mcx"):
        t = g.qubits[-1]
        if len(g.qubits) == 2:
            return [CX(*g.qubits)]
        return [H(t)] + multi_controlled_z(g.qubits) + [H(t)]
    return [g]


def decompose_multi_controlled(c: QuantumCircuit) -> QuantumCircuit:
    if not any(g.kind in MULTI_CONTROL_KINDS for g in c.gates):
        return c.copy()
    out = QuantumCircuit(c.n_qubits, name=c.name)
    for g in c.gates:
        out.extend(decompose_gate(g))
    return out
