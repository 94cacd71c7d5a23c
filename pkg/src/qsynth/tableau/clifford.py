"""Clifford operators stored as the images of the single-qubit Z and X generators."""

from __future__ import annotations

from collections.abc import Iterable

from ..circuit.core import QuantumCircuit
from ..circuit.gates import CX, CZ, H, S, Sdg, X, Z, Gate, rotation_angle
from ..gf2 import BooleanMatrix, gaussian_elimination, inverse as gf2_inverse
from .pauli import PauliString, hermitian_product, multiply


class NotCliffordError(ValueError):
    pass


def _bit(v: int, q: int) -> int:
    return (v >> q) & 1


def conjugate_by_gate(p: PauliString, g: Gate) -> PauliString:
    """Return ``g p g^dagger`` for a Clifford gate ``g``."""
    n, x, z = p.n, p.x, p.z
    r = 0 if p.sign > 0 else 1
    k = g.kind
    qs = g.qubits

    def h(q):
        nonlocal x, z, r
        xb, zb = _bit(x, q), _bit(z, q)
        r ^= xb & zb
        if xb != zb:
            x ^= 1 << q
            z ^= 1 << q

    def s(q):
        nonlocal z, r
        r ^= _bit(x, q) & _bit(z, q)
        z ^= x & (1 << q)

    def sdg(q):
        nonlocal z, r
        z ^= x & (1 << q)
        r ^= _bit(x, q) & _bit(z, q)

    def cx(c, t):
        nonlocal x, z, r
        xc, zc, xt, zt = _bit(x, c), _bit(z, c), _bit(x, t), _bit(z, t)
        r ^= xc & zt & (xt ^ zc ^ 1)
        x ^= xc << t
        z ^= zt << c

    if k in ("rz", "rx"):
        eighths = rotation_angle(g).quarter_turns()
        if eighths is None or eighths % 2:
            raise NotCliffordError(f"{g} is not a Clifford gate")
        k = {"rz": ["i", "s", "z", "sdg"], "rx": ["i", "sx", "x", "sxdg"]}[g.kind][eighths // 2]
    q = qs[0]
    if k == "i":
        pass
    elif k == "h":
        h(q)
    elif k == "s":
        s(q)
    elif k == "sdg":
        sdg(q)
    elif k == "x":
        r ^= _bit(z, q)
    elif k == "z":
        r ^= _bit(x, q)
    elif k == "y":
        r ^= _bit(x, q) ^ _bit(z, q)
    elif k == "sx":
        h(q)
        s(q)
        h(q)
    elif k == "sxdg":
        h(q)
        sdg(q)
        h(q)
    elif k == "cx":
        cx(qs[0], qs[1])
    elif k == "cz":
        h(qs[1])
        cx(qs[0], qs[1])
        h(qs[1])
    elif k == "swap":
        a, b = qs
        for name in ("x", "z"):
            v = x if name == "x" else z
            if _bit(v, a) != _bit(v, b):
                v ^= (1 << a) | (1 << b)
            if name == "x":
                x = v
            else:
                z = v
    else:
        raise NotCliffordError(f"{g} is not a Clifford gate")
    return PauliString(n, x, z, -1 if r else 1)


def rotation_conjugate(p: PauliString, q: PauliString, turns: int, dagger: bool = False) -> PauliString:
    """``K q K^dagger`` for ``K = exp(-i turns*pi/4 p)``; ``dagger`` gives ``K^dagger q K``."""
    turns %= 4
    if turns == 0 or p.commutes(q):
        return q
    if turns == 2:
        return -q
    # K q K^dagger = q (cos t + i sin t p) with t = turns*pi/2
    extra = 1 if turns == 1 else 3
    if dagger:
        extra = 4 - extra
    return hermitian_product(q, p, extra)


class CliffordTableau:
    """Images ``U Z_i U^dagger`` and ``U X_i U^dagger`` of a Clifford ``U``."""

    def __init__(self, n: int, z_images: list[PauliString] | None = None,
                 x_images: list[PauliString] | None = None):
        self.n = n
        self.z_images = list(z_images) if z_images is not None else [PauliString.single(n, q, "Z") for q in range(n)]
        self.x_images = list(x_images) if x_images is not None else [PauliString.single(n, q, "X") for q in range(n)]
        if len(self.z_images) != n or len(self.x_images) != n:
            raise ValueError("a tableau needs one Z and one X image per qubit")

    @classmethod
    def identity(cls, n: int) -> CliffordTableau:
        return cls(n)

    @classmethod
    def from_gates(cls, n: int, gates: Iterable[Gate]) -> CliffordTableau:
        t = cls(n)
        for g in gates:
            t.apply(g)
        return t

    @classmethod
    def from_circuit(cls, c: QuantumCircuit) -> CliffordTableau:
        return cls.from_gates(c.n_qubits, c.gates)

    def copy(self) -> CliffordTableau:
        return CliffordTableau(self.n, self.z_images, self.x_images)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CliffordTableau):
            return NotImplemented
        return self.n == other.n and self.z_images == other.z_images and self.x_images == other.x_images

    def is_identity(self) -> bool:
        return self == CliffordTableau(self.n)

    def rows(self) -> list[PauliString]:
        return self.z_images + self.x_images

    # composition

    def apply(self, g: Gate) -> CliffordTableau:
        """``U <- g U`` (``g`` runs after the current operator)."""
        self.z_images = [conjugate_by_gate(p, g) for p in self.z_images]
        self.x_images = [conjugate_by_gate(p, g) for p in self.x_images]
        return self

    def prepend(self, g: Gate) -> CliffordTableau:
        """``U <- U g`` (``g`` runs before the current operator)."""
        new_z, new_x = {}, {}
        for q in g.qubits:
            new_z[q] = self.conjugate(conjugate_by_gate(PauliString.single(self.n, q, "Z"), g))
            new_x[q] = self.conjugate(conjugate_by_gate(PauliString.single(self.n, q, "X"), g))
        for q in g.qubits:
            self.z_images[q] = new_z[q]
            self.x_images[q] = new_x[q]
        return self

    def apply_rotation(self, p: PauliString, turns: int) -> CliffordTableau:
        """``U <- K U`` with ``K = exp(-i turns*pi/4 p)``."""
        self.z_images = [rotation_conjugate(p, r, turns) for r in self.z_images]
        self.x_images = [rotation_conjugate(p, r, turns) for r in self.x_images]
        return self

    def prepend_rotation(self, p: PauliString, turns: int) -> CliffordTableau:
        """``U <- U K`` with ``K = exp(-i turns*pi/4 p)``."""
        k_images = [self.conjugate(rotation_conjugate(p, g, turns))
                    for g in CliffordTableau(self.n).rows()]
        self.z_images = k_images[:self.n]
        self.x_images = k_images[self.n:]
        return self

    def then(self, other: CliffordTableau) -> CliffordTableau:
        """The operator ``other * self`` (``self`` first)."""
        return CliffordTableau(self.n, [other.conjugate(p) for p in self.z_images],
                               [other.conjugate(p) for p in self.x_images])

    def conjugate(self, p: PauliString) -> PauliString:
        """``U p U^dagger``."""
        # p = sign * i^{|x&z|} * prod_q X_q^{x_q} Z_q^{z_q}
        k = 2 * (p.sign < 0) + bin(p.x & p.z).count("1")
        acc = PauliString(self.n)
        for q in range(self.n):
            for bits, images in ((p.x, self.x_images), (p.z, self.z_images)):
                if _bit(bits, q):
                    dk, acc = multiply(acc, images[q])
                    k += dk
        k %= 4
        if k % 2:
            raise ValueError("conjugation produced a non-Hermitian operator")
        return acc if k == 0 else -acc

    # structure

    def symplectic_matrix(self) -> BooleanMatrix:
        """Column ``j`` is the (x|z) vector of image ``j``; Z images first."""
        cols = []
        for p in self.rows():
            cols.append([_bit(p.x, q) for q in range(self.n)] + [_bit(p.z, q) for q in range(self.n)])
        return BooleanMatrix.from_columns(2 * self.n, cols) if cols else BooleanMatrix.zeros(0, 0)

    def is_symplectic(self) -> bool:
        rows = self.rows()
        n = self.n
        for i in range(2 * n):
            for j in range(i + 1, 2 * n):
                anti = i < n <= j and j - n == i
                if rows[i].commutes(rows[j]) == anti:
                    return False
        return True

    def inverse(self) -> CliffordTableau:
        n = self.n
        if n == 0:
            return CliffordTableau(0)
        minv = gf2_inverse(self.symplectic_matrix())
        out = []
        for target in CliffordTableau(n).rows():
            vec = [_bit(target.x, q) for q in range(n)] + [_bit(target.z, q) for q in range(n)]
            coeffs = minv.apply(vec)
            zx = sum(1 << q for q in range(n) if coeffs[q])
            xx = sum(1 << q for q in range(n) if coeffs[n + q])
            cand = PauliString(n, xx, zx)
            if self.conjugate(cand).sign != target.sign:
                cand = -cand
            out.append(cand)
        return CliffordTableau(n, out[:n], out[n:])

    def is_cnot_only(self) -> bool:
        return (all(p.x == 0 and p.sign > 0 for p in self.z_images)
                and all(p.z == 0 and p.sign > 0 for p in self.x_images))

    # synthesis

    def to_gates(self) -> list[Gate]:
        """Gates whose product equals this operator up to global phase."""
        if self.is_cnot_only():
            return self._linear_gates()
        work = self.copy()
        ops: list[Gate] = []

        def do(g: Gate) -> None:
            work.apply(g)
            ops.append(g)

        n = self.n
        for i in range(n):
            p = work.x_images[i]
            for k in range(i, n):
                if _bit(p.z, k):
                    do(S(k) if _bit(p.x, k) else H(k))
            p = work.x_images[i]
            if not _bit(p.x, i):
                k = next(k for k in range(i + 1, n) if _bit(p.x, k))
                do(CX(k, i))
            p = work.x_images[i]
            for k in range(i + 1, n):
                if _bit(p.x, k):
                    do(CX(i, k))
            p = work.z_images[i]
            if _bit(p.x, i):
                do(H(i))
                do(S(i))
                do(H(i))
            p = work.z_images[i]
            for k in range(i + 1, n):
                xb, zb = _bit(p.x, k), _bit(p.z, k)
                if xb and zb:
                    do(S(k))
                    do(H(k))
                elif xb:
                    do(H(k))
            p = work.z_images[i]
            for k in range(i + 1, n):
                if _bit(p.z, k):
                    do(CX(k, i))
        for i in range(n):
            if work.x_images[i].sign < 0:
                do(Z(i))
            if work.z_images[i].sign < 0:
                do(X(i))
        assert work.is_identity(), "Clifford synthesis did not reach the identity"
        return [g.inverse() for g in reversed(ops)]

    def _linear_gates(self) -> list[Gate]:
        n = self.n
        if n == 0:
            return []
        # column j of A is the X-support of the image of X_j
        a = BooleanMatrix.from_columns(n, [[_bit(p.x, q) for q in range(n)] for p in self.x_images])
        _, trace = gaussian_elimination(a, full=True)
        ops: list[Gate] = []
        for kind, i, j in trace.steps:
            if kind == "swap":
                ops += [CX(i, j), CX(j, i), CX(i, j)]
            else:
                ops.append(CX(i, j))
        return list(reversed(ops))

    def to_circuit(self) -> QuantumCircuit:
        return QuantumCircuit(self.n, self.to_gates())

    def __str__(self) -> str:
        lines = [f"Z{q} -> {p}" for q, p in enumerate(self.z_images)]
        lines += [f"X{q} -> {p}" for q, p in enumerate(self.x_images)]
        return "\n".join(lines)


def diagonal_clifford_gates(linear: dict[int, int], quadratic: dict[tuple[int, int], int]) -> list[Gate]:
    """Gates for ``omega^(sum l_a x_a + sum q_ab x_a x_b)`` with even ``l`` and ``q`` in {0, 4}."""
    gates: list[Gate] = []
    for a in sorted(linear):
        v = linear[a] % 8
        if v % 2:
            raise ValueError("odd linear term is not Clifford")
        gates += {0: [], 2: [S(a)], 4: [Z(a)], 6: [Sdg(a)]}[v]
    for (a, b) in sorted(quadratic):
        v = quadratic[(a, b)] % 8
        if v not in (0, 4):
            raise ValueError("quadratic term is not Clifford")
        if v == 4:
            gates.append(CZ(a, b))
    return gates


__all__ = [
    "CliffordTableau",
    "NotCliffordError",
    "conjugate_by_gate",
    "diagonal_clifford_gates",
    "rotation_conjugate",
]
