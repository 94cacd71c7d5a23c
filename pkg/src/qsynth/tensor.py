"""Dense unitary semantics and the numerical equivalence oracle."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from .circuit.core import QuantumCircuit

if TYPE_CHECKING:
    from .zx.diagram import ZXDiagram

MAX_QUBITS = 10
UNITARY_TOL = 1e-9
EQUIV_TOL = 1e-9


class QubitCapError(ValueError):
    pass


@dataclass(frozen=True)
class Unitary:
    """A ``2^n x 2^n`` unitary; qubit 0 is the most significant index bit."""

    n: int
    matrix: np.ndarray

    def __post_init__(self):
        dim = 2 ** self.n
        if self.matrix.shape != (dim, dim):
            raise ValueError(f"matrix shape {self.matrix.shape} does not match {self.n} qubits")
        err = np.linalg.norm(self.matrix @ self.matrix.conj().T - np.eye(dim))
        if err > UNITARY_TOL * max(1, dim):
            raise ValueError(f"matrix is not unitary (deviation {err:.3e})")

    def adjoint(self) -> Unitary:
        return Unitary(self.n, self.matrix.conj().T)

    def __matmul__(self, other: Unitary) -> Unitary:
        return Unitary(self.n, self.matrix @ other.matrix)


@dataclass(frozen=True)
class EquivalenceReport:
    equivalent: bool
    fidelity: float
    worst_entry_deviation: float

    def __str__(self) -> str:
        verdict = "equivalent" if self.equivalent else "not equivalent"
        return f"{verdict} (fidelity {self.fidelity:.12f}, worst entry deviation {self.worst_entry_deviation:.3e})"


def _check_cap(n: int) -> None:
    if n > MAX_QUBITS:
        raise QubitCapError(f"{n} qubits exceeds the dense-unitary cap of {MAX_QUBITS}")


def apply_gate_matrix(state: np.ndarray, n: int, gate_matrix: np.ndarray, qubits: tuple[int, ...]) -> np.ndarray:
    """Left-multiply ``state`` (shape ``(2^n, k)``) by a gate acting on ``qubits``."""
    k = len(qubits)
    cols = state.shape[1]
    tensor = state.reshape((2,) * n + (cols,))
    g = gate_matrix.reshape((2,) * (2 * k))
    moved = np.tensordot(g, tensor, axes=(list(range(k, 2 * k)), list(qubits)))
    # tensordot puts the gate output axes first
    moved = np.moveaxis(moved, list(range(k)), list(qubits))
    return moved.reshape(2 ** n, cols)


def unitary_of_circuit(c: QuantumCircuit) -> Unitary:
    _check_cap(c.n_qubits)
    dim = 2 ** c.n_qubits
    u = np.eye(dim, dtype=complex)
    for g in c.gates:
        u = apply_gate_matrix(u, c.n_qubits, g.matrix(), g.qubits)
    return Unitary(c.n_qubits, u)


def equiv_up_to_global_phase(u: Unitary | np.ndarray, v: Unitary | np.ndarray) -> EquivalenceReport:
    a = u.matrix if isinstance(u, Unitary) else np.asarray(u)
    b = v.matrix if isinstance(v, Unitary) else np.asarray(v)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    dim = a.shape[0]
    overlap = np.trace(a.conj().T @ b)
    fidelity = float(min(1.0, abs(overlap) / dim))
    phase = overlap / abs(overlap) if abs(overlap) > 1e-15 else 1.0
    worst = float(np.max(np.abs(a * phase - b))) if a.size else 0.0
    return EquivalenceReport(fidelity >= 1 - EQUIV_TOL, fidelity, worst)


def circuits_equivalent(a: QuantumCircuit, b: QuantumCircuit) -> EquivalenceReport:
    return equiv_up_to_global_phase(unitary_of_circuit(a), unitary_of_circuit(b))


def proportional(a: np.ndarray, b: np.ndarray, tol: float = 1e-9) -> bool:
    """True when ``a = lambda * b`` for some nonzero scalar."""
    if a.shape != b.shape:
        return False
    na, nb = np.linalg.norm(a), np.linalg.norm(b)
    if na < 1e-12 or nb < 1e-12:
        return na < 1e-12 and nb < 1e-12
    a, b = a / na, b / nb
    overlap = np.vdot(a, b)
    return abs(abs(overlap) - 1) < tol


# ZX semantics by variable elimination.

_HAD = np.array([[1, 1], [1, -1]], dtype=complex)


class _UnionFind:
    def __init__(self):
        self.parent: dict[int, int] = {}

    def find(self, x: int) -> int:
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            lo, hi = sorted((ra, rb))
            self.parent[hi] = lo


def linear_map_of_zx(d: ZXDiagram) -> np.ndarray:
    """Matrix of the diagram (outputs x inputs) up to a nonzero scalar."""
    from .zx.diagram import EdgeType, VertexType

    n_bound = len(d.inputs) + len(d.outputs)
    if max(len(d.inputs), len(d.outputs)) > MAX_QUBITS:
        raise QubitCapError(f"diagram has more than {MAX_QUBITS} boundary pairs")
    uf = _UnionFind()
    phases: dict[int, float] = {}
    had_edges: list[tuple[int, int]] = []

    def kind(v):
        return d.type(v)

    for v in d.vertices():
        uf.find(v)
    for u, v, et in d.edges():
        # an X spider is a Z spider with every incident edge toggled
        flips = (kind(u) == VertexType.X) + (kind(v) == VertexType.X)
        hadamard = (et == EdgeType.HADAMARD) ^ (flips % 2 == 1)
        if hadamard:
            had_edges.append((u, v))
        else:
            uf.union(u, v)
    for v in d.vertices():
        if kind(v) != VertexType.BOUNDARY:
            r = uf.find(v)
            phases[r] = phases.get(r, 0.0) + d.phase(v).radians()
    boundaries = list(d.outputs) + list(d.inputs)
    roots = {uf.find(v) for v in d.vertices()}
    open_roots = []
    for b in boundaries:
        r = uf.find(b)
        if r not in open_roots:
            open_roots.append(r)

    factors: list[tuple[np.ndarray, list[int]]] = []
    for r in sorted(roots):
        ph = phases.get(r, 0.0)
        factors.append((np.array([1.0, np.exp(1j * ph)], dtype=complex), [r]))
    for u, v in had_edges:
        ru, rv = uf.find(u), uf.find(v)
        if ru == rv:
            factors.append((np.array([1.0, -1.0], dtype=complex), [ru]))
        else:
            factors.append((_HAD, [ru, rv]))

    internal = [r for r in sorted(roots) if r not in open_roots]
    result = _eliminate(factors, internal, open_roots)

    # expand shared roots back to one index per boundary
    idx = np.indices((2,) * n_bound).reshape(n_bound, -1)
    pos = {r: i for i, r in enumerate(open_roots)}
    first: dict[int, int] = {}
    consistent = np.ones(idx.shape[1], dtype=bool)
    for i, b in enumerate(boundaries):
        r = uf.find(b)
        if r in first:
            consistent &= idx[i] == idx[first[r]]
        else:
            first[r] = i
    gather = tuple(idx[first[r]] for r in open_roots)
    flat = np.where(consistent, result[gather] if open_roots else result, 0)
    n_out, n_in = len(d.outputs), len(d.inputs)
    return flat.reshape(2 ** n_out, 2 ** n_in)


def _eliminate(factors, internal, keep):
    factors = list(factors)
    remaining = set(internal)
    while remaining:
        # pick the variable whose elimination creates the smallest factor
        best, best_size = None, None
        for var in sorted(remaining):
            scope = set()
            for _, vs in factors:
                if var in vs:
                    scope.update(vs)
            if best_size is None or len(scope) < best_size:
                best, best_size = var, len(scope)
        involved = [f for f in factors if best in f[1]]
        factors = [f for f in factors if best not in f[1]]
        out_vars = sorted({x for _, vs in involved for x in vs if x != best})
        factors.append((_contract(involved, out_vars), out_vars))
        remaining.discard(best)
    return _contract(factors, keep)


def _contract(factors, out_vars):
    letters: dict[int, int] = {}
    operands = []
    for arr, vs in factors:
        operands.append(arr)
        operands.append([letters.setdefault(v, len(letters)) for v in vs])
    out = [letters.setdefault(v, len(letters)) for v in out_vars]
    if len(letters) > 52:
        raise QubitCapError("diagram too large for dense contraction")
    if not factors:
        return np.ones((2,) * len(out_vars), dtype=complex) if out_vars else np.array(1.0 + 0j)
    result = np.einsum(*operands, out, optimize=len(factors) > 2)
    # variables absent from every factor are unconstrained
    return result


def unitary_of_zx(d: ZXDiagram) -> Unitary:
    if len(d.inputs) != len(d.outputs):
        raise ValueError("diagram is not square")
    m = linear_map_of_zx(d)
    n = len(d.inputs)
    norm = np.linalg.norm(m)
    if norm < 1e-12:
        raise ValueError("diagram denotes the zero map")
    return Unitary(n, m * np.sqrt(2 ** n) / norm)
