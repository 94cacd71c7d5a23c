"""Hermitian Pauli strings as bitmasks, and Pauli rotations."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np

from ..circuit.phase import Phase


def _pc(x: int) -> int:
    return bin(x).count("1")


@dataclass(frozen=True)
class PauliString:
    """``sign * P_0 (x) ... (x) P_{n-1}``; qubit ``q`` is bit ``q`` of the masks.

    ``x=1, z=1`` on a qubit denotes ``Y``.
    """

    n: int
    x: int = 0
    z: int = 0
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        limit = 1 << self.n
        if self.x >= limit or self.z >= limit or self.x < 0 or self.z < 0:
            raise ValueError("Pauli bits exceed the qubit count")

    @classmethod
    def identity(cls, n: int) -> PauliString:
        return cls(n)

    @classmethod
    def single(cls, n: int, q: int, letter: str) -> PauliString:
        bit = 1 << q
        x = bit if letter in "XY" else 0
        z = bit if letter in "ZY" else 0
        return cls(n, x, z)

    @classmethod
    def from_str(cls, text: str) -> PauliString:
        text = text.strip()
        sign = 1
        if text[0] in "+-":
            sign = -1 if text[0] == "-" else 1
            text = text[1:]
        x = z = 0
        for q, ch in enumerate(text):
            if ch not in "IXYZ":
                raise ValueError(f"bad Pauli letter {ch!r}")
            if ch in "XY":
                x |= 1 << q
            if ch in "ZY":
                z |= 1 << q
        return cls(len(text), x, z, sign)

    def letter(self, q: int) -> str:
        return "IXZY"[((self.x >> q) & 1) | (((self.z >> q) & 1) << 1)]

    def letters(self) -> str:
        return "".join(self.letter(q) for q in range(self.n))

    def __str__(self) -> str:
        return ("+" if self.sign > 0 else "-") + self.letters()

    @property
    def support(self) -> int:
        return self.x | self.z

    def weight(self) -> int:
        return _pc(self.support)

    def is_identity(self) -> bool:
        return self.support == 0

    def is_diagonal(self) -> bool:
        return self.x == 0

    def commutes(self, other: PauliString) -> bool:
        return _pc((self.x & other.z) ^ (self.z & other.x)) % 2 == 0

    def same_axis(self, other: PauliString) -> bool:
        return self.x == other.x and self.z == other.z

    def __neg__(self) -> PauliString:
        return PauliString(self.n, self.x, self.z, -self.sign)

    def positive(self) -> PauliString:
        return PauliString(self.n, self.x, self.z, 1)

    def matrix(self) -> np.ndarray:
        mats = {"I": np.eye(2), "X": np.array([[0, 1], [1, 0]]), "Y": np.array([[0, -1j], [1j, 0]]),
                "Z": np.diag([1, -1])}
        out = reduce(np.kron, [mats[self.letter(q)] for q in range(self.n)], np.eye(1))
        return self.sign * out.astype(complex)


def product_phase(px: int, pz: int, qx: int, qz: int) -> int:
    """Exponent ``e`` with ``P * Q = i^e * R`` for unsigned Hermitian P, Q, R."""
    py, pxo, pzo = px & pz, px & ~pz, pz & ~px
    qy, qxo, qzo = qx & qz, qx & ~qz, qz & ~qx
    return (_pc(py & qzo) - _pc(py & qxo) - _pc(pxo & qzo) + _pc(pxo & qy)
            + _pc(pzo & qxo) - _pc(pzo & qy))


def multiply(p: PauliString, q: PauliString) -> tuple[int, PauliString]:
    """Return ``(k, R)`` with ``p * q = i^k * R`` and ``R`` carrying sign +."""
    k = product_phase(p.x, p.z, q.x, q.z)
    k += 2 * ((p.sign < 0) + (q.sign < 0))
    return k % 4, PauliString(p.n, p.x ^ q.x, p.z ^ q.z)


def hermitian_product(p: PauliString, q: PauliString, extra: int = 0) -> PauliString:
    """``i^extra * p * q``, which must be Hermitian."""
    k, r = multiply(p, q)
    k = (k + extra) % 4
    if k % 2:
        raise ValueError("product is not Hermitian")
    return r if k == 0 else -r


@dataclass(frozen=True)
class PauliRotation:
    """``exp(-i * angle/2 * P)`` with the sign of ``P`` folded into the angle."""

    pauli: PauliString
    angle: Phase

    @staticmethod
    def make(pauli: PauliString, angle: Phase) -> PauliRotation | None:
        if pauli.sign < 0:
            pauli, angle = pauli.positive(), -angle
        if angle.is_zero() or pauli.is_identity():
            return None
        return PauliRotation(pauli, angle)

    def is_clifford(self) -> bool:
        return self.angle.denominator <= 2

    def is_diagonal(self) -> bool:
        return self.pauli.is_diagonal()

    def is_t_like(self) -> bool:
        return self.angle.is_t_like()

    def matrix(self) -> np.ndarray:
        theta = self.angle.radians()
        dim = 2 ** self.pauli.n
        return np.cos(theta / 2) * np.eye(dim) - 1j * np.sin(theta / 2) * self.pauli.matrix()

    def __str__(self) -> str:
        return f"{self.pauli.letters()} {self.angle.pretty()}"
