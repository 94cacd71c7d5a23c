"""Gate model and the open gate-kind registry."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .phase import PI, PI_2, PI_4, Phase


@dataclass(frozen=True)
class Gate:
    """A gate application. ``qubits`` lists controls before targets."""

    kind: str
    qubits: tuple[int, ...]
    param: Phase | None = None

    def __post_init__(self):
        object.__setattr__(self, "qubits", tuple(self.qubits))
        if len(set(self.qubits)) != len(self.qubits):
            raise ValueError(f"gate {self.kind} has repeated qubits {self.qubits}")
        spec = lookup(self.kind)
        if spec.arity is not None and len(self.qubits) != spec.arity:
            raise ValueError(f"gate {self.kind} expects {spec.arity} qubits, got {len(self.qubits)}")
        if spec.min_arity and len(self.qubits) < spec.min_arity:
            raise ValueError(f"gate {self.kind} expects at least {spec.min_arity} qubits")
        if spec.parametric != (self.param is not None):
            raise ValueError(f"gate {self.kind} parameter mismatch")

    @property
    def spec(self) -> GateKind:
        return lookup(self.kind)

    def inverse(self) -> Gate:
        spec = self.spec
        if spec.inverse is None:
            raise ValueError(f"gate kind {self.kind} has no registered inverse")
        return spec.inverse(self)

    def matrix(self) -> np.ndarray:
        spec = self.spec
        if spec.matrix is None:
            raise ValueError(f"gate kind {self.kind} has no registered unitary")
        return spec.matrix(self)

    def on(self, *qubits: int) -> Gate:
        return Gate(self.kind, qubits, self.param)

    def __str__(self) -> str:
        args = ",".join(f"q[{q}]" for q in self.qubits)
        if self.param is not None:
            return f"{self.kind}({self.param.qasm()}) {args}"
        return f"{self.kind} {args}"


@dataclass(frozen=True)
class GateKind:
    name: str
    arity: int | None
    matrix: Callable[[Gate], np.ndarray] | None
    inverse: Callable[[Gate], Gate] | None
    parametric: bool = False
    min_arity: int = 0
    # Rotation axis for single-qubit phase-like kinds: "z" or "x".
    axis: str | None = None
    # Fixed rotation angle for non-parametric axis kinds.
    angle: Phase | None = None
    diagonal: bool = False
    qasm_name: str | None = None
    tags: frozenset[str] = field(default_factory=frozenset)


_REGISTRY: dict[str, GateKind] = {}


def register(kind: GateKind) -> None:
    """Add or replace a gate kind in the registry."""
    _REGISTRY[kind.name] = kind


def lookup(name: str) -> GateKind:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise ValueError(f"unknown gate kind {name!r}") from None


def registered_kinds() -> list[str]:
    return list(_REGISTRY)


# Matrices, qubit 0 of the gate is the most significant index bit.

_SQ2 = 1 / math.sqrt(2)
_I2 = np.eye(2, dtype=complex)
_H = np.array([[_SQ2, _SQ2], [_SQ2, -_SQ2]], dtype=complex)
_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
_Z = np.diag([1, -1]).astype(complex)


def _phase_diag(theta: float) -> np.ndarray:
    return np.diag([1, cmath.exp(1j * theta)])


def rz_matrix(theta: float) -> np.ndarray:
    return np.diag([cmath.exp(-0.5j * theta), cmath.exp(0.5j * theta)])


def rx_matrix(theta: float) -> np.ndarray:
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    return np.array([[c, -1j * s], [-1j * s, c]], dtype=complex)


def _controlled(u: np.ndarray, n_controls: int) -> np.ndarray:
    dim = 2 ** (n_controls + 1)
    out = np.eye(dim, dtype=complex)
    out[dim - 2:, dim - 2:] = u
    return out


def _const(m: np.ndarray) -> Callable[[Gate], np.ndarray]:
    return lambda g: m


def _self_inverse(g: Gate) -> Gate:
    return g


def _to(name: str) -> Callable[[Gate], Gate]:
    return lambda g: Gate(name, g.qubits)


def _negate(g: Gate) -> Gate:
    return Gate(g.kind, g.qubits, -g.param)


_SX = 0.5 * np.array([[1 + 1j, 1 - 1j], [1 - 1j, 1 + 1j]])
_SWAP = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex)

for _kind in [
    GateKind("h", 1, _const(_H), _self_inverse),
    GateKind("x", 1, _const(_X), _self_inverse, axis="x", angle=PI),
    GateKind("y", 1, _const(_Y), _self_inverse),
    GateKind("z", 1, _const(_Z), _self_inverse, axis="z", angle=PI, diagonal=True),
    GateKind("s", 1, _const(_phase_diag(math.pi / 2)), _to("sdg"), axis="z", angle=PI_2, diagonal=True),
    GateKind("sdg", 1, _const(_phase_diag(-math.pi / 2)), _to("s"), axis="z", angle=-PI_2, diagonal=True),
    GateKind("t", 1, _const(_phase_diag(math.pi / 4)), _to("tdg"), axis="z", angle=PI_4, diagonal=True),
    GateKind("tdg", 1, _const(_phase_diag(-math.pi / 4)), _to("t"), axis="z", angle=-PI_4, diagonal=True),
    GateKind("sx", 1, _const(_SX), _to("sxdg"), axis="x", angle=PI_2),
    GateKind("sxdg", 1, _const(_SX.conj().T), _to("sx"), axis="x", angle=-PI_2),
    GateKind("rz", 1, lambda g: rz_matrix(g.param.radians()), _negate, parametric=True, axis="z",
             diagonal=True),
    GateKind("rx", 1, lambda g: rx_matrix(g.param.radians()), _negate, parametric=True, axis="x"),
    GateKind("cx", 2, _const(_controlled(_X, 1)), _self_inverse),
    GateKind("cz", 2, _const(_controlled(_Z, 1)), _self_inverse, diagonal=True),
    GateKind("swap", 2, _const(_SWAP), _self_inverse),
    GateKind("ccx", 3, _const(_controlled(_X, 2)), _self_inverse),
    GateKind("ccz", 3, _const(_controlled(_Z, 2)), _self_inverse, diagonal=True),
    GateKind("mcx", None, lambda g: _controlled(_X, len(g.qubits) - 1), _self_inverse, min_arity=2),
]:
    register(_kind)

# Kinds whose qubit order does not matter.
SYMMETRIC_KINDS = frozenset({"cz", "swap", "ccz"})
CLIFFORD_KINDS = frozenset({"h", "x", "y", "z", "s", "sdg", "sx", "sxdg", "cx", "cz", "swap"})
MULTI_CONTROL_KINDS = frozenset({"ccx", "ccz", "mcx"})


def is_clifford(g: Gate) -> bool:
    if g.kind in CLIFFORD_KINDS:
        return True
    if g.param is not None:
        return g.param.is_clifford()
    return False


def rotation_angle(g: Gate) -> Phase | None:
    """Rotation angle of a single-qubit axis gate (``rz``, ``t``, ``sx``...)."""
    spec = g.spec
    if spec.axis is None:
        return None
    return g.param if spec.parametric else spec.angle


# Canonical fixed-angle kind names for z and x rotations.
_Z_NAMES = {Phase(1, 4): "t", Phase(1, 2): "s", Phase(1): "z", Phase(3, 2): "sdg", Phase(7, 4): "tdg"}
_X_NAMES = {Phase(1, 2): "sx", Phase(1): "x", Phase(3, 2): "sxdg"}


def axis_gate(axis: str, angle: Phase, qubit: int) -> Gate | None:
    """Canonical gate for a rotation about ``axis``; ``None`` for the zero angle."""
    if angle.is_zero():
        return None
    names = _Z_NAMES if axis == "z" else _X_NAMES
    name = names.get(angle)
    if name is not None:
        return Gate(name, (qubit,))
    return Gate("rz" if axis == "z" else "rx", (qubit,), angle)


# convenience constructors

def H(q: int) -> Gate:
    return Gate("h", (q,))


def X(q: int) -> Gate:
    return Gate("x", (q,))


def Y(q: int) -> Gate:
    return Gate("y", (q,))


def Z(q: int) -> Gate:
    return Gate("z", (q,))


def S(q: int) -> Gate:
    return Gate("s", (q,))


def Sdg(q: int) -> Gate:
    return Gate("sdg", (q,))


def T(q: int) -> Gate:
    return Gate("t", (q,))


def Tdg(q: int) -> Gate:
    return Gate("tdg", (q,))


def SX(q: int) -> Gate:
    return Gate("sx", (q,))


def RZ(q: int, angle: Phase) -> Gate:
    return Gate("rz", (q,), angle)


def RX(q: int, angle: Phase) -> Gate:
    return Gate("rx", (q,), angle)


def CX(c: int, t: int) -> Gate:
    return Gate("cx", (c, t))


def CZ(a: int, b: int) -> Gate:
    return Gate("cz", (a, b))


def SWAP(a: int, b: int) -> Gate:
    return Gate("swap", (a, b))


def CCX(c1: int, c2: int, t: int) -> Gate:
    return Gate("ccx", (c1, c2, t))


def CCZ(a: int, b: int, c: int) -> Gate:
    return Gate("ccz", (a, b, c))


def MCX(*qubits: int) -> Gate:
    return Gate("mcx", tuple(qubits))
