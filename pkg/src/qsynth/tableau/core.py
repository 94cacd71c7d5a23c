"""Tableaux: ordered sequences of Clifford operators and Pauli-rotation groups."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..circuit.core import QuantumCircuit
from ..circuit.decompose import decompose_multi_controlled
from ..circuit.gates import CX, CZ, H, RZ, S, Sdg, Gate, Z, is_clifford, rotation_angle
from ..circuit.phase import Phase
from .clifford import CliffordTableau, NotCliffordError
from .pauli import PauliRotation, PauliString


@dataclass
class RotationGroup:
    rotations: list[PauliRotation] = field(default_factory=list)

    def is_diagonal(self) -> bool:
        return all(r.is_diagonal() for r in self.rotations)

    def __len__(self) -> int:
        return len(self.rotations)


Element = CliffordTableau | RotationGroup


@dataclass
class Tableau:
    """Elements act in list order; the operator is the product with element 0 rightmost."""

    n: int
    elements: list[Element] = field(default_factory=list)

    def copy(self) -> Tableau:
        return Tableau(self.n, [e.copy() if isinstance(e, CliffordTableau) else RotationGroup(list(e.rotations))
                                for e in self.elements])

    def rotations(self) -> list[PauliRotation]:
        return [r for e in self.elements if isinstance(e, RotationGroup) for r in e.rotations]

    def rotation_count(self) -> int:
        return len(self.rotations())

    def t_count(self) -> int:
        return sum(1 for r in self.rotations() if r.is_t_like())

    def non_clifford_count(self) -> int:
        return sum(1 for r in self.rotations() if not r.is_clifford())

    def __str__(self) -> str:
        lines = [f"Tableau ({self.n} qubits, {len(self.elements)} elements)"]
        for e in self.elements:
            if isinstance(e, CliffordTableau):
                lines.append("Clifford:")
                lines += ["  " + row for row in str(e).splitlines()]
            else:
                lines.append(f"Rotations ({len(e)}):")
                lines += [f"  {r}" for r in e.rotations]
        return "\n".join(lines)


# conversion

def from_circuit(c: QuantumCircuit) -> Tableau:
    """Fold Clifford gates into a trailing tableau; each z/x rotation becomes a Pauli rotation."""
    n = c.n_qubits
    cliff = CliffordTableau(n)
    cinv = CliffordTableau(n)  # inverse of ``cliff``
    rots: list[PauliRotation] = []
    for g in decompose_multi_controlled(c).gates:
        if is_clifford(g):
            cliff.apply(g)
            cinv.prepend(g.inverse())
            continue
        axis = g.spec.axis
        if axis is None or len(g.qubits) != 1:
            raise NotCliffordError(f"gate {g} is neither Clifford nor a single-axis rotation")
        p = PauliString.single(n, g.qubits[0], axis.upper())
        r = PauliRotation.make(cinv.conjugate(p), rotation_angle(g))
        if r is not None:
            rots.append(r)
    return Tableau(n, [RotationGroup(rots), cliff])


def _basis_change(p: PauliString) -> tuple[list[Gate], int]:
    """Gates mapping ``p`` onto a Z-type Pauli, and its Z support."""
    gates = []
    for q in range(p.n):
        letter = p.letter(q)
        if letter == "X":
            gates.append(H(q))
        elif letter == "Y":
            gates += [Sdg(q), H(q)]
    return gates, p.support


def rotation_gates(r: PauliRotation) -> list[Gate]:
    """CX-ladder synthesis of one Pauli rotation."""
    pre, support = _basis_change(r.pauli)
    qubits = [q for q in range(r.pauli.n) if (support >> q) & 1]
    t = qubits[-1]
    ladder = [CX(q, t) for q in qubits[:-1]]
    turns = r.angle.quarter_turns()
    core: list[Gate]
    if turns is not None and turns % 2 == 0:
        core = {2: [S(t)], 4: [Z(t)], 6: [Sdg(t)]}[turns % 8]
    else:
        core = [RZ(t, r.angle)]
    post = [g.inverse() for g in reversed(pre)]
    return pre + ladder + core + ladder[::-1] + post


def to_circuit(t: Tableau) -> QuantumCircuit:
    gates: list[Gate] = []
    for e in t.elements:
        if isinstance(e, CliffordTableau):
            gates += e.to_gates()
        else:
            for r in e.rotations:
                gates += rotation_gates(r)
    return QuantumCircuit(t.n, gates)


# structural helpers

def _quarter(angle: Phase) -> int | None:
    """Angle in units of pi/2 if it is a Clifford angle."""
    e = angle.quarter_turns()
    return e // 2 if e is not None and e % 2 == 0 else None


def _conjugate_rotation(r: PauliRotation, k: PauliString, turns: int, dagger: bool) -> PauliRotation:
    from .clifford import rotation_conjugate
    return PauliRotation.make(rotation_conjugate(k, r.pauli, turns, dagger), r.angle)


def flatten(t: Tableau) -> tuple[list[PauliRotation], CliffordTableau]:
    """Rewrite ``t`` as one rotation list followed by a single Clifford."""
    n = t.n
    w = CliffordTableau(n)
    winv = CliffordTableau(n)
    rots: list[PauliRotation] = []
    for e in t.elements:
        if isinstance(e, CliffordTableau):
            w = w.then(e)
            winv = e.inverse().then(winv)
        else:
            for r in e.rotations:
                moved = PauliRotation.make(winv.conjugate(r.pauli), r.angle)
                if moved is not None:
                    rots.append(moved)
    return rots, w


def _trailing_clifford(t: Tableau, index: int) -> CliffordTableau:
    if index + 1 < len(t.elements) and isinstance(t.elements[index + 1], CliffordTableau):
        return t.elements[index + 1]
    cliff = CliffordTableau(t.n)
    t.elements.insert(index + 1, cliff)
    return cliff


# phase merging

def _merge_group(rotations: list[PauliRotation]) -> tuple[list[PauliRotation], list[tuple[PauliString, int]]]:
    """Merge commuting equal-axis rotations; returns survivors and absorbed Cliffords in order."""
    pending = list(rotations)
    out: list[PauliRotation] = []
    absorbed: list[tuple[PauliString, int]] = []
    while pending:
        r = pending.pop(0)
        turns = _quarter(r.angle)
        if turns is None:
            pos = None
            for i in range(len(out) - 1, -1, -1):
                if out[i].pauli.same_axis(r.pauli):
                    pos = i
                    break
                if not out[i].pauli.commutes(r.pauli):
                    break
            if pos is None:
                out.append(r)
                continue
            merged = PauliRotation.make(r.pauli, out[pos].angle + r.angle)
            if merged is None:
                del out[pos]
                continue
            turns = _quarter(merged.angle)
            if turns is None:
                out[pos] = merged
                continue
            # the merged rotation is Clifford: move it past everything after it
            del out[pos]
            later = out[pos:]
            out = out[:pos]
            pending = later + pending
            r = merged
        k = r.pauli
        pending = [m for m in (_conjugate_rotation(x, k, turns, dagger=True) for x in pending) if m is not None]
        absorbed.append((k, turns))
    return out, absorbed


def tmerge(t: Tableau) -> Tableau:
    """Merge rotations about the same Pauli axis inside each rotation group."""
    t = t.copy()
    i = 0
    while i < len(t.elements):
        e = t.elements[i]
        if isinstance(e, RotationGroup):
            survivors, absorbed = _merge_group(e.rotations)
            e.rotations = survivors
            if absorbed:
                cliff = _trailing_clifford(t, i)
                for k, turns in absorbed:
                    cliff.prepend_rotation(k, turns)
        i += 1
    return t


# internal Hadamard optimization

def diagonalizing_gates(paulis: list[PauliString], n: int) -> list[Gate]:
    """Clifford gates ``V`` with ``V P V^dagger`` diagonal for every (commuting) ``P``."""
    rows = [(p.x, p.z) for p in paulis]
    # row-reduce the X block; products of the Paulis share the same diagonalizer
    pivots: list[int] = []
    reduced: list[tuple[int, int]] = []
    work = list(rows)
    for col in range(n):
        idx = next((i for i, (x, _) in enumerate(work) if (x >> col) & 1), None)
        if idx is None:
            continue
        px, pz = work.pop(idx)
        work = [(x ^ px, z ^ pz) if (x >> col) & 1 else (x, z) for x, z in work]
        reduced = [(x ^ px, z ^ pz) if (x >> col) & 1 else (x, z) for x, z in reduced]
        reduced.append((px, pz))
        pivots.append(col)
    gates: list[Gate] = []
    state = CliffordTableau(n)

    def do(g: Gate) -> None:
        gates.append(g)
        state.apply(g)

    gens = [PauliString(n, x, z) for x, z in reduced]
    for i, col in enumerate(pivots):
        p = state.conjugate(gens[i])
        for k in range(n):
            if k != col and (p.x >> k) & 1:
                do(CX(col, k))
    for i, col in enumerate(pivots):
        p = state.conjugate(gens[i])
        if (p.z >> col) & 1:
            do(S(col))
        p = state.conjugate(gens[i])
        for k in range(n):
            if k != col and (p.z >> k) & 1:
                do(CZ(col, k))
    for col in pivots:
        do(H(col))
    return gates


def hopt(t: Tableau) -> Tableau:
    """Regroup rotations into diagonal groups separated by Clifford basis changes."""
    n = t.n
    rots, w = flatten(t)
    elements: list[Element] = []
    while rots:
        chosen: list[PauliRotation] = []
        skipped: list[PauliRotation] = []
        for r in rots:
            if all(r.pauli.commutes(s.pauli) for s in skipped) and all(r.pauli.commutes(c.pauli) for c in chosen):
                chosen.append(r)
            else:
                skipped.append(r)
        v = CliffordTableau.from_gates(n, diagonalizing_gates([r.pauli for r in chosen], n))
        vinv = v.inverse()
        group = []
        for r in chosen:
            d = PauliRotation.make(v.conjugate(r.pauli), r.angle)
            if d is not None:
                group.append(d)
        if not v.is_identity():
            elements.append(v)
        elements.append(RotationGroup(group))
        rots = [m for m in (PauliRotation.make(v.conjugate(r.pauli), r.angle) for r in skipped) if m is not None]
        w = vinv.then(w)
    elements.append(w)
    return Tableau(n, elements)


def canonical_clifford_last(t: Tableau) -> Tableau:
    """One rotation group followed by one Clifford."""
    rots, w = flatten(t)
    return Tableau(t.n, [RotationGroup(rots), w])


__all__ = [
    "Element",
    "RotationGroup",
    "Tableau",
    "canonical_clifford_last",
    "diagonalizing_gates",
    "flatten",
    "from_circuit",
    "hopt",
    "rotation_gates",
    "tmerge",
    "to_circuit",
]
