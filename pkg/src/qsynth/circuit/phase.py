"""Exact rotation angles stored as rational multiples of pi."""

from __future__ import annotations

import ast
import math
import operator
from fractions import Fraction
from functools import total_ordering

# Float literals in QASM are snapped to the nearest rational multiple of pi
# with at most this denominator.
MAX_FLOAT_DENOMINATOR = 1 << 16


@total_ordering
class Phase:
    """An angle ``(numerator / denominator) * pi`` normalized to ``[0, 2*pi)``."""

    __slots__ = ("_value",)

    def __init__(self, numerator: int | Fraction = 0, denominator: int = 1):
        value = Fraction(numerator) / denominator
        self._value = value - 2 * math.floor(value / 2)

    @classmethod
    def from_fraction(cls, value: Fraction) -> Phase:
        return cls(value)

    @classmethod
    def from_radians(cls, theta: float, max_denominator: int = MAX_FLOAT_DENOMINATOR) -> Phase:
        return cls(Fraction(theta / math.pi).limit_denominator(max_denominator))

    @classmethod
    def parse(cls, text: str) -> Phase:
        """Parse an arithmetic expression in ``pi`` such as ``3*pi/4`` or ``-pi/8``."""
        return cls(_evaluate(text))

    @property
    def numerator(self) -> int:
        return self._value.numerator

    @property
    def denominator(self) -> int:
        return self._value.denominator

    @property
    def fraction(self) -> Fraction:
        return self._value

    def radians(self) -> float:
        return float(self._value) * math.pi

    def is_zero(self) -> bool:
        return self._value == 0

    def is_pauli(self) -> bool:
        return self._value.denominator == 1

    def is_clifford(self) -> bool:
        return self._value.denominator <= 2

    def is_t_like(self) -> bool:
        return self._value.denominator == 4

    def quarter_turns(self) -> int | None:
        """Angle in units of pi/4, or ``None`` when not a multiple of pi/4."""
        scaled = self._value * 4
        return int(scaled) if scaled.denominator == 1 else None

    def __add__(self, other: Phase) -> Phase:
        if not isinstance(other, Phase):
            return NotImplemented
        return Phase(self._value + other._value)

    def __sub__(self, other: Phase) -> Phase:
        if not isinstance(other, Phase):
            return NotImplemented
        return Phase(self._value - other._value)

    def __neg__(self) -> Phase:
        return Phase(-self._value)

    def __mul__(self, k: int) -> Phase:
        if not isinstance(k, int):
            return NotImplemented
        return Phase(self._value * k)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Phase):
            return self._value == other._value
        return NotImplemented

    def __lt__(self, other: Phase) -> bool:
        return self._value < other._value

    def __hash__(self) -> int:
        return hash(self._value)

    def __bool__(self) -> bool:
        return self._value != 0

    def __repr__(self) -> str:
        return f"Phase({self.qasm()})"

    def qasm(self) -> str:
        """Text form used in QASM and dumps: ``0``, ``pi``, ``pi/4``, ``3*pi/4``."""
        n, d = self.numerator, self.denominator
        if n == 0:
            return "0"
        head = "pi" if n == 1 else f"{n}*pi"
        return head if d == 1 else f"{head}/{d}"

    def pretty(self) -> str:
        return self.qasm().replace("*pi", "π").replace("pi", "π")


_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
}


def _evaluate(text: str) -> Fraction:
    """Evaluate an angle expression and return it in units of pi."""
    source = text.strip().replace("π", "pi")
    try:
        tree = ast.parse(source, mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"invalid angle expression {text!r}") from exc
    value = _eval_node(tree.body, text)
    if isinstance(value, _PiMultiple):
        return value.coeff
    # A bare number is an angle in radians.
    return Fraction(float(value) / math.pi).limit_denominator(MAX_FLOAT_DENOMINATOR)


class _PiMultiple:
    """Intermediate value ``coeff * pi`` during expression evaluation."""

    __slots__ = ("coeff",)

    def __init__(self, coeff: Fraction):
        self.coeff = coeff


def _as_number(v, text: str) -> Fraction:
    if isinstance(v, _PiMultiple):
        raise ValueError(f"non-linear use of pi in {text!r}")
    return v


def _eval_node(node: ast.AST, text: str):
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
        if isinstance(node.value, float):
            return Fraction(node.value).limit_denominator(1 << 40)
        return Fraction(node.value)
    if isinstance(node, ast.Name) and node.id == "pi":
        return _PiMultiple(Fraction(1))
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval_node(node.operand, text)
        if isinstance(node.op, ast.UAdd):
            return v
        return _PiMultiple(-v.coeff) if isinstance(v, _PiMultiple) else -v
    if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
        left = _eval_node(node.left, text)
        right = _eval_node(node.right, text)
        op = type(node.op)
        lpi, rpi = isinstance(left, _PiMultiple), isinstance(right, _PiMultiple)
        if op in (ast.Add, ast.Sub):
            if lpi != rpi:
                # mixing radians with pi multiples; fall back to radians
                lv = left.coeff * Fraction(math.pi) if lpi else left
                rv = right.coeff * Fraction(math.pi) if rpi else right
                return _BINOPS[op](lv, rv)
            if lpi:
                return _PiMultiple(_BINOPS[op](left.coeff, right.coeff))
            return _BINOPS[op](left, right)
        if op is ast.Mult:
            if lpi and rpi:
                raise ValueError(f"non-linear use of pi in {text!r}")
            if lpi:
                return _PiMultiple(left.coeff * right)
            if rpi:
                return _PiMultiple(left * right.coeff)
            return left * right
        # division
        divisor = _as_number(right, text)
        if divisor == 0:
            raise ValueError(f"division by zero in {text!r}")
        if lpi:
            return _PiMultiple(left.coeff / divisor)
        return left / divisor
    raise ValueError(f"unsupported angle expression {text!r}")


ZERO = Phase(0)
PI = Phase(1)
PI_2 = Phase(1, 2)
PI_4 = Phase(1, 4)
