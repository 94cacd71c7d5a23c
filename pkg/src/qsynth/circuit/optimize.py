"""Commutation-aware peephole cancellation and rotation merging."""

from __future__ import annotations

import logging

from .core import QuantumCircuit
from .gates import SYMMETRIC_KINDS, Gate, axis_gate, rotation_angle

log = logging.getLogger(__name__)

_SELF_INVERSE = frozenset({"h", "y", "cx", "cz", "swap", "ccx", "ccz", "mcx"})


def _axis(g: Gate) -> str | None:
    return g.spec.axis if len(g.qubits) == 1 else None


def _is_diagonal(g: Gate) -> bool:
    return g.spec.diagonal


def _same_target(a: Gate, b: Gate) -> bool:
    if a.kind != b.kind:
        return False
    if a.kind in SYMMETRIC_KINDS:
        return set(a.qubits) == set(b.qubits)
    if a.kind in ("ccx", "mcx"):
        return a.qubits[-1] == b.qubits[-1] and set(a.qubits) == set(b.qubits)
    return a.qubits == b.qubits


def commutes(a: Gate, b: Gate) -> bool:
    """Cheap sufficient test for ``a`` and ``b`` commuting."""
    if not set(a.qubits) & set(b.qubits):
        return True
    if _is_diagonal(a) and _is_diagonal(b):
        return True
    for first, second in ((a, b), (b, a)):
        if first.kind == "cx":
            c, t = first.qubits
            ax = _axis(second)
            if ax == "z" and second.qubits[0] == c:
                return True
            if ax == "x" and second.qubits[0] == t:
                return True
            if second.kind == "cx":
                c2, t2 = second.qubits
                return c != t2 and c2 != t
            if second.kind in ("cz", "ccz"):
                return t not in second.qubits
    return False


def _absorb(out: list[Gate], g: Gate) -> bool:
    """Try to merge or cancel ``g`` against an earlier gate in ``out``."""
    ax = _axis(g)
    for i in range(len(out) - 1, -1, -1):
        prev = out[i]
        if ax is not None and _axis(prev) == ax and prev.qubits == g.qubits:
            merged = axis_gate(ax, rotation_angle(prev) + rotation_angle(g), g.qubits[0])
            if merged is None:
                del out[i]
            else:
                out[i] = merged
            return True
        if g.kind in _SELF_INVERSE and _same_target(prev, g):
            del out[i]
            return True
        if not commutes(prev, g):
            return False
    return False


def _canonical(g: Gate) -> Gate | None:
    ax = _axis(g)
    if ax is None:
        return g
    return axis_gate(ax, rotation_angle(g), g.qubits[0])


def basic_optimize(c: QuantumCircuit, max_rounds: int = 16) -> QuantumCircuit:
    gates = list(c.gates)
    for round_no in range(max_rounds):
        out: list[Gate] = []
        for g in gates:
            g = _canonical(g)
            if g is None:
                continue
            if not _absorb(out, g):
                out.append(g)
        log.debug("basic_optimize round %d: %d -> %d gates", round_no, len(gates), len(out))
        if len(out) == len(gates):
            gates = out
            break
        gates = out
    return QuantumCircuit(c.n_qubits, gates, c.name)
