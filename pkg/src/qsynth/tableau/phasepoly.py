"""Phase polynomials over Clifford+T and the TODD column-reduction optimizer."""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from ..circuit.core import QuantumCircuit
from ..circuit.phase import Phase
from ..gf2 import BooleanMatrix, kernel_basis
from .clifford import CliffordTableau, diagonal_clifford_gates
from .pauli import PauliRotation, PauliString

log = logging.getLogger(__name__)


class NotProperError(ValueError):
    pass


class SignatureMismatchError(RuntimeError):
    pass


def _pc(x: int) -> int:
    return bin(x).count("1")


@dataclass(frozen=True)
class PhasePolynomial:
    """``|x> -> omega^(sum_i c_i * parity(v_i . x)) |x>`` with ``omega = e^(i pi/4)``.

    Column ``v_i`` is stored as an int whose bit ``q`` is qubit ``q``.
    """

    n: int
    columns: tuple[int, ...] = ()
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        if len(self.columns) != len(self.coeffs):
            raise ValueError("one coefficient per column")
        for v in self.columns:
            if v <= 0 or v >= 1 << self.n:
                raise ValueError(f"column {v:#b} is zero or exceeds {self.n} qubits")
        object.__setattr__(self, "coeffs", tuple(c % 8 for c in self.coeffs))

    @classmethod
    def from_terms(cls, n: int, terms) -> PhasePolynomial:
        """Build from ``(support, coeff)`` pairs, supports given as qubit iterables or ints."""
        cols, coeffs = [], []
        for support, c in terms:
            v = support if isinstance(support, int) else sum(1 << q for q in support)
            cols.append(v)
            coeffs.append(c)
        return cls(n, tuple(cols), tuple(coeffs))

    @classmethod
    def from_rotations(cls, n: int, rotations: list[PauliRotation]) -> PhasePolynomial:
        cols, coeffs = [], []
        for r in rotations:
            if not r.is_diagonal():
                raise ValueError("phase polynomials hold diagonal rotations only")
            k = r.angle.quarter_turns()
            if k is None:
                raise ValueError(f"angle {r.angle} is not a multiple of pi/4")
            cols.append(r.pauli.z)
            coeffs.append(k)
        return cls(n, tuple(cols), tuple(coeffs))

    def to_rotations(self) -> list[PauliRotation]:
        out = []
        for v, c in zip(self.columns, self.coeffs):
            r = PauliRotation.make(PauliString(self.n, 0, v), Phase(c, 4))
            if r is not None:
                out.append(r)
        return out

    @property
    def gadgets(self) -> BooleanMatrix:
        return BooleanMatrix(self.n, len(self.columns),
                             [sum(((v >> q) & 1) << i for i, v in enumerate(self.columns))
                              for q in range(self.n)])

    def __len__(self) -> int:
        return len(self.columns)

    def is_proper(self) -> bool:
        return all(c % 2 for c in self.coeffs)

    def t_count(self) -> int:
        return sum(1 for c in self.coeffs if c % 2)

    def evaluate(self, x: int) -> int:
        """Exponent of ``omega`` on basis state ``x`` (bit ``q`` = qubit ``q``)."""
        return sum(c * (_pc(v & x) & 1) for v, c in zip(self.columns, self.coeffs)) % 8

    def diagonal(self) -> np.ndarray:
        """Diagonal of the operator in the big-endian basis (qubit 0 is the MSB)."""
        n = self.n
        out = np.empty(2 ** n, dtype=complex)
        for idx in range(2 ** n):
            x = sum(((idx >> (n - 1 - q)) & 1) << q for q in range(n))
            out[idx] = np.exp(1j * np.pi / 4 * self.evaluate(x))
        return out

    def to_circuit(self) -> QuantumCircuit:
        from .core import rotation_gates
        gates = []
        for r in self.to_rotations():
            gates += rotation_gates(r)
        return QuantumCircuit(self.n, gates)


# algebraic expansion: parity(v) = sum over nonempty S in v of (-2)^(|S|-1) prod_{j in S} x_j

def _monomials(poly: PhasePolynomial, odd_only: bool = False):
    lin: Counter[int] = Counter()
    quad: Counter[tuple[int, int]] = Counter()
    cub: Counter[tuple[int, int, int]] = Counter()
    for v, c in zip(poly.columns, poly.coeffs):
        if odd_only:
            if c % 2 == 0:
                continue
            c = 1
        qs = [q for q in range(poly.n) if (v >> q) & 1]
        for a in qs:
            lin[a] += c
        for a, b in combinations(qs, 2):
            quad[(a, b)] -= 2 * c
        for a, b, d in combinations(qs, 3):
            cub[(a, b, d)] += 4 * c
    return lin, quad, cub


def _signature_array(poly: PhasePolynomial, odd_only: bool) -> np.ndarray:
    n = poly.n
    sig = np.zeros((n, n, n), dtype=np.uint8)
    for v, c in zip(poly.columns, poly.coeffs):
        if odd_only and c % 2 == 0:
            continue
        qs = [q for q in range(n) if (v >> q) & 1]
        for a in qs:
            for b in qs:
                for d in qs:
                    sig[a, b, d] ^= 1
    return sig


def signature(poly: PhasePolynomial) -> np.ndarray:
    """Symmetric GF(2) tensor ``S[a,b,c] = sum_i A[a,i] A[b,i] A[c,i]``."""
    if not poly.is_proper():
        raise NotProperError("signature needs every coefficient odd")
    return _signature_array(poly, odd_only=False)


def apply_clifford_correction(cliff: CliffordTableau, before: PhasePolynomial,
                              after: PhasePolynomial) -> CliffordTableau:
    """Return ``cliff * D`` where ``D = U_before * U_after^dagger`` is a diagonal Clifford."""
    if not np.array_equal(_signature_array(before, True), _signature_array(after, True)):
        raise SignatureMismatchError("polynomials differ by a non-Clifford term")
    lb, qb, cb = _monomials(before)
    la, qa, ca = _monomials(after)
    for key in set(cb) | set(ca):
        if (cb[key] - ca[key]) % 8:
            raise SignatureMismatchError("cubic terms differ")
    linear = {a: (lb[a] - la[a]) % 8 for a in set(lb) | set(la)}
    quadratic = {k: (qb[k] - qa[k]) % 8 for k in set(qb) | set(qa)}
    out = cliff.copy()
    for g in diagonal_clifford_gates(linear, quadratic):
        out.prepend(g)
    return out


def properize(cliff: CliffordTableau, poly: PhasePolynomial) -> tuple[CliffordTableau, PhasePolynomial]:
    """Merge duplicate columns and move even-coefficient terms into ``cliff``."""
    merged: dict[int, int] = {}
    for v, c in zip(poly.columns, poly.coeffs):
        merged[v] = (merged.get(v, 0) + c) % 8
    cols = tuple(v for v, c in merged.items() if c % 2)
    proper = PhasePolynomial(poly.n, cols, tuple(merged[v] for v in cols))
    return apply_clifford_correction(cliff, poly, proper), proper


def _reduce_columns(columns: list[int]) -> list[int]:
    """Drop zero columns and cancel equal columns in pairs, keeping first occurrences."""
    counts = Counter(columns)
    out, seen = [], set()
    for v in columns:
        if v and counts[v] % 2 and v not in seen:
            seen.add(v)
            out.append(v)
    return out


def _rows_of(columns: list[int], n: int) -> list[int]:
    return [sum(((v >> q) & 1) << i for i, v in enumerate(columns)) for q in range(n)]


def _todd_constraints(rows: list[int], z: int, n: int) -> list[int]:
    """Rows ``y`` must annihilate for ``A + z y^T`` to keep the cubic signature."""
    zb = [(z >> q) & 1 for q in range(n)]
    cons = []
    for a, b in combinations(range(n), 2):
        r = (rows[a] if zb[b] else 0) ^ (rows[b] if zb[a] else 0)
        if r:
            cons.append(r)
    for a, b, c in combinations(range(n), 3):
        r = 0
        if zb[a]:
            r ^= rows[b] & rows[c]
        if zb[b]:
            r ^= rows[a] & rows[c]
        if zb[c]:
            r ^= rows[a] & rows[b]
        if zb[a] and zb[b]:
            r ^= rows[c]
        if zb[a] and zb[c]:
            r ^= rows[b]
        if zb[b] and zb[c]:
            r ^= rows[a]
        if r:
            cons.append(r)
    return cons


def todd_once(poly: PhasePolynomial) -> PhasePolynomial:
    """One signature-preserving step that removes at least one column, if found."""
    if not poly.is_proper():
        raise NotProperError("todd_once needs every coefficient odd")
    cols = list(poly.columns)
    m, n = len(cols), poly.n
    if m < 2:
        return poly
    rows = _rows_of(cols, n)
    for a, b in combinations(range(m), 2):
        z = cols[a] ^ cols[b]
        cons = _todd_constraints(rows, z, n)
        if cons:
            basis = kernel_basis(BooleanMatrix(len(cons), m, cons))
        else:
            basis = [[int(i == j) for i in range(m)] for j in range(m)]
        for y in basis:
            if y[a] == y[b]:
                continue
            new = [v ^ z if y[i] else v for i, v in enumerate(cols)]
            if sum(y) % 2:
                new.append(z)
            new = _reduce_columns(new)
            if len(new) < m:
                log.debug("todd: pair (%d, %d) removes %d columns", a, b, m - len(new))
                return PhasePolynomial(n, tuple(new), (1,) * len(new))
    return poly


def todd(cliff: CliffordTableau, poly: PhasePolynomial) -> tuple[CliffordTableau, PhasePolynomial]:
    """Properize, reduce columns to a fixpoint, then repair the Clifford part."""
    cliff, proper = properize(cliff, poly)
    current = proper
    while True:
        nxt = todd_once(current)
        if len(nxt) >= len(current):
            break
        current = nxt
    return apply_clifford_correction(cliff, proper, current), current


def ccz_polynomial(n: int, qubits: tuple[int, int, int]) -> PhasePolynomial:
    """The seven-term polynomial of a CCZ on the given qubits."""
    terms = []
    for size in (1, 2, 3):
        for subset in combinations(qubits, size):
            terms.append((subset, 1 if size % 2 else -1))
    return PhasePolynomial.from_terms(n, terms)


__all__ = [
    "NotProperError",
    "PhasePolynomial",
    "SignatureMismatchError",
    "apply_clifford_correction",
    "ccz_polynomial",
    "properize",
    "signature",
    "todd",
    "todd_once",
]
