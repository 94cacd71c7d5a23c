"""Shared fixtures and an independent dense-matrix oracle.

The oracle below builds circuit unitaries from its own gate table and a
Kronecker-product embedding, so it does not share code with ``qsynth.tensor``.
"""

from __future__ import annotations

import math
import sys
from pathlib import Path

import numpy as np
import pytest

from qsynth.circuit import QuantumCircuit
from qsynth.circuit.random import fuzz_corpus

BENCHMARKS = Path(__file__).resolve().parents[1] / "src" / "qsynth" / "data" / "benchmarks"
GOLDEN = Path(__file__).resolve().parent / "golden"

_I = np.eye(2)
_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Y = np.array([[0, -1j], [1j, 0]])
_Z = np.diag([1, -1]).astype(complex)
_H = np.array([[1, 1], [1, -1]]) / math.sqrt(2)


def _rz(theta: float) -> np.ndarray:
    return np.diag([np.exp(-0.5j * theta), np.exp(0.5j * theta)])


def _rx(theta: float) -> np.ndarray:
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    return np.array([[c, -1j * s], [-1j * s, c]])


ONE_QUBIT = {
    "h": lambda g: _H,
    "x": lambda g: _X,
    "y": lambda g: _Y,
    "z": lambda g: _Z,
    "s": lambda g: np.diag([1, 1j]),
    "sdg": lambda g: np.diag([1, -1j]),
    "t": lambda g: np.diag([1, np.exp(0.25j * np.pi)]),
    "tdg": lambda g: np.diag([1, np.exp(-0.25j * np.pi)]),
    "sx": lambda g: 0.5 * np.array([[1 + 1j, 1 - 1j], [1 - 1j, 1 + 1j]]),
    "sxdg": lambda g: 0.5 * np.array([[1 - 1j, 1 + 1j], [1 + 1j, 1 - 1j]]),
    "rz": lambda g: _rz(g.param.radians()),
    "rx": lambda g: _rx(g.param.radians()),
}


def _projector(bit: int) -> np.ndarray:
    return np.diag([1 - bit, bit]).astype(complex)


def _embed(n: int, ops: dict[int, np.ndarray]) -> np.ndarray:
    out = np.eye(1, dtype=complex)
    for q in range(n):
        out = np.kron(out, ops.get(q, _I))
    return out


def _controlled(n: int, controls: tuple[int, ...], target: int, u: np.ndarray) -> np.ndarray:
    """Sum over control patterns; only the all-ones pattern applies ``u``."""
    total = np.zeros((2 ** n, 2 ** n), dtype=complex)
    for pattern in range(2 ** len(controls)):
        bits = [(pattern >> k) & 1 for k in range(len(controls))]
        ops = {c: _projector(b) for c, b in zip(controls, bits)}
        if all(bits):
            ops[target] = u
        total += _embed(n, ops)
    return total


def gate_unitary(g, n: int) -> np.ndarray:
    if g.kind in ONE_QUBIT:
        return _embed(n, {g.qubits[0]: ONE_QUBIT[g.kind](g)})
    if g.kind in ("cx", "ccx", "mcx"):
        return _controlled(n, g.qubits[:-1], g.qubits[-1], _X)
    if g.kind in ("cz", "ccz", "mcz"):
        return _controlled(n, g.qubits[:-1], g.qubits[-1], _Z)
    if g.kind == "swap":
        a, b = g.qubits
        return (_controlled(n, (a,), b, _X) @ _controlled(n, (b,), a, _X)
                @ _controlled(n, (a,), b, _X))
    raise KeyError(f"oracle has no matrix for {g.kind}")


def oracle_unitary(c: QuantumCircuit) -> np.ndarray:
    u = np.eye(2 ** c.n_qubits, dtype=complex)
    for g in c.gates:
        u = gate_unitary(g, c.n_qubits) @ u
    return u


def same_up_to_phase(a: np.ndarray, b: np.ndarray, tol: float = 1e-9) -> bool:
    if a.shape != b.shape:
        return False
    fidelity = abs(np.trace(a.conj().T @ b)) / a.shape[0]
    return fidelity >= 1 - tol


def assert_equivalent(a: QuantumCircuit, b: QuantumCircuit) -> None:
    assert a.n_qubits == b.n_qubits
    assert same_up_to_phase(oracle_unitary(a), oracle_unitary(b))


@pytest.fixture(scope="session")
def corpus() -> list[QuantumCircuit]:
    return fuzz_corpus(200)


@pytest.fixture(scope="session")
def small_corpus(corpus) -> list[QuantumCircuit]:
    return [c for c in corpus if c.n_qubits <= 5][:60]


def zx_oracle(d) -> np.ndarray:
    """Brute-force linear map of a small ZX-diagram, up to a scalar.

    Every vertex carries one bit. An X-spider is a Z-spider with a Hadamard on
    each leg, so each X endpoint toggles the effective edge type. A plain edge
    forces equal bits; a Hadamard edge contributes (-1)^(a*b).
    """
    from qsynth.zx import EdgeType, VertexType

    verts = d.vertices()
    index = {v: i for i, v in enumerate(verts)}
    edges = []
    for u, v, et in d.edges():
        hadamard = et == EdgeType.HADAMARD
        hadamard ^= d.type(u) == VertexType.X
        hadamard ^= d.type(v) == VertexType.X
        edges.append((index[u], index[v], hadamard))
    phases = [0.0 if d.type(v) == VertexType.BOUNDARY else d.phase(v).radians() for v in verts]
    boundary = [index[v] for v in d.inputs] + [index[v] for v in d.outputs]
    free = [i for i in range(len(verts)) if i not in boundary]
    n_in, n_out = len(d.inputs), len(d.outputs)
    out = np.zeros((2 ** n_out, 2 ** n_in), dtype=complex)
    bits = [0] * len(verts)
    for b in range(2 ** (n_in + n_out)):
        for k, i in enumerate(boundary):
            bits[i] = (b >> (n_in + n_out - 1 - k)) & 1
        amp = 0j
        for f in range(2 ** len(free)):
            for k, i in enumerate(free):
                bits[i] = (f >> k) & 1
            w = 1 + 0j
            for i, j, had in edges:
                if had:
                    w *= -1 if bits[i] and bits[j] else 1
                elif bits[i] != bits[j]:
                    w = 0
                    break
            if w == 0:
                continue
            for i in free:
                if bits[i]:
                    w *= np.exp(1j * phases[i])
            amp += w
        col = b >> n_out
        row = b & ((1 << n_out) - 1)
        out[row, col] = amp
    return out


def proportional(a: np.ndarray, b: np.ndarray, tol: float = 1e-9) -> bool:
    na, nb = np.linalg.norm(a), np.linalg.norm(b)
    if na < 1e-12 or nb < 1e-12:
        return na < 1e-12 and nb < 1e-12
    return abs(abs(np.vdot(a / na, b / nb)) - 1) < tol


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for num in sorted(results):
            terminalreporter.write_line(results[num])
