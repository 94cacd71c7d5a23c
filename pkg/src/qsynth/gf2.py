"""Dense linear algebra over GF(2).

Rows are stored as Python ints; bit ``j`` of a row is column ``j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

BitVector = list[int]


@dataclass
class RowOpTrace:
    """Row operations in the order they were applied.

    ``steps`` interleaves both kinds: ``("add", src, tgt)`` means
    ``row[tgt] ^= row[src]`` and ``("swap", a, b)`` exchanges two rows.
    """

    steps: list[tuple[str, int, int]] = field(default_factory=list)

    @property
    def ops(self) -> list[tuple[int, int]]:
        return [(a, b) for kind, a, b in self.steps if kind == "add"]

    @property
    def swaps(self) -> list[tuple[int, int]]:
        return [(a, b) for kind, a, b in self.steps if kind == "swap"]

    def add(self, src: int, tgt: int) -> None:
        self.steps.append(("add", src, tgt))

    def swap(self, a: int, b: int) -> None:
        self.steps.append(("swap", a, b))

    def __len__(self) -> int:
        return len(self.steps)


class BooleanMatrix:
    """A ``rows x cols`` matrix over GF(2)."""

    __slots__ = ("n_rows", "n_cols", "_rows")

    def __init__(self, n_rows: int, n_cols: int, rows: Sequence[int] | None = None):
        if n_rows < 0 or n_cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        self.n_rows = n_rows
        self.n_cols = n_cols
        if rows is None:
            self._rows = [0] * n_rows
        else:
            if len(rows) != n_rows:
                raise ValueError(f"expected {n_rows} rows, got {len(rows)}")
            mask = (1 << n_cols) - 1
            for r in rows:
                if r < 0 or r & ~mask:
                    raise ValueError("row has bits outside the column range")
            self._rows = list(rows)

    # construction

    @classmethod
    def from_lists(cls, data: Sequence[Sequence[int]], n_cols: int | None = None) -> BooleanMatrix:
        if n_cols is None:
            n_cols = len(data[0]) if data else 0
        rows = []
        for row in data:
            if len(row) != n_cols:
                raise ValueError("ragged matrix")
            rows.append(_pack(row))
        return cls(len(data), n_cols, rows)

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> BooleanMatrix:
        return cls(n_rows, n_cols)

    @classmethod
    def identity(cls, n: int) -> BooleanMatrix:
        return cls(n, n, [1 << i for i in range(n)])

    @classmethod
    def from_columns(cls, n_rows: int, columns: Sequence[Sequence[int]]) -> BooleanMatrix:
        m = cls(n_rows, len(columns))
        for j, col in enumerate(columns):
            if len(col) != n_rows:
                raise ValueError("column length mismatch")
            for i, bit in enumerate(col):
                if bit & 1:
                    m._rows[i] |= 1 << j
        return m

    def copy(self) -> BooleanMatrix:
        return BooleanMatrix(self.n_rows, self.n_cols, self._rows)

    # access

    def _check(self, r: int, c: int) -> None:
        if not (0 <= r < self.n_rows and 0 <= c < self.n_cols):
            raise IndexError(f"index ({r}, {c}) out of range for {self.n_rows}x{self.n_cols} matrix")

    def __getitem__(self, idx: tuple[int, int]) -> int:
        r, c = idx
        self._check(r, c)
        return (self._rows[r] >> c) & 1

    def __setitem__(self, idx: tuple[int, int], value: int) -> None:
        r, c = idx
        self._check(r, c)
        if value & 1:
            self._rows[r] |= 1 << c
        else:
            self._rows[r] &= ~(1 << c)

    def row_bits(self, r: int) -> int:
        if not 0 <= r < self.n_rows:
            raise IndexError(f"row {r} out of range")
        return self._rows[r]

    def row(self, r: int) -> BitVector:
        bits = self.row_bits(r)
        return [(bits >> c) & 1 for c in range(self.n_cols)]

    def column(self, c: int) -> BitVector:
        if not 0 <= c < self.n_cols:
            raise IndexError(f"column {c} out of range")
        return [(r >> c) & 1 for r in self._rows]

    def to_lists(self) -> list[BitVector]:
        return [self.row(r) for r in range(self.n_rows)]

    # elementary operations

    def add_row(self, src: int, tgt: int) -> None:
        """``row[tgt] ^= row[src]``."""
        self.row_bits(src)
        self.row_bits(tgt)
        self._rows[tgt] ^= self._rows[src]

    def swap_rows(self, a: int, b: int) -> None:
        self.row_bits(a)
        self.row_bits(b)
        self._rows[a], self._rows[b] = self._rows[b], self._rows[a]

    def append_row(self, bits: Sequence[int]) -> None:
        if len(bits) != self.n_cols:
            raise ValueError("row length mismatch")
        self._rows.append(_pack(bits))
        self.n_rows += 1

    def transpose(self) -> BooleanMatrix:
        t = BooleanMatrix(self.n_cols, self.n_rows)
        for i, row in enumerate(self._rows):
            for j in _bits(row):
                t._rows[j] |= 1 << i
        return t

    def __matmul__(self, other: BooleanMatrix) -> BooleanMatrix:
        if self.n_cols != other.n_rows:
            raise ValueError("dimension mismatch in product")
        out = BooleanMatrix(self.n_rows, other.n_cols)
        for i, row in enumerate(self._rows):
            acc = 0
            for k in _bits(row):
                acc ^= other._rows[k]
            out._rows[i] = acc
        return out

    def apply(self, v: Sequence[int]) -> BitVector:
        """Matrix-vector product ``self @ v``."""
        if len(v) != self.n_cols:
            raise ValueError("dimension mismatch in product")
        packed = _pack(v)
        return [bin(row & packed).count("1") & 1 for row in self._rows]

    def is_zero(self) -> bool:
        return not any(self._rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BooleanMatrix):
            return NotImplemented
        return (self.n_rows, self.n_cols, self._rows) == (other.n_rows, other.n_cols, other._rows)

    def __hash__(self) -> int:
        return hash((self.n_rows, self.n_cols, tuple(self._rows)))

    def __repr__(self) -> str:
        return f"BooleanMatrix({self.to_lists()})"

    def __str__(self) -> str:
        return "\n".join("".join(str(b) for b in self.row(r)) for r in range(self.n_rows))


def _pack(bits: Iterable[int]) -> int:
    out = 0
    for j, b in enumerate(bits):
        if b & 1:
            out |= 1 << j
    return out


def _bits(x: int) -> Iterable[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def replay(trace: RowOpTrace, m: BooleanMatrix) -> BooleanMatrix:
    """Apply a recorded trace to a copy of ``m``."""
    out = m.copy()
    for kind, a, b in trace.steps:
        if kind == "add":
            out.add_row(a, b)
        else:
            out.swap_rows(a, b)
    return out


def gaussian_elimination(m: BooleanMatrix, full: bool = False) -> tuple[BooleanMatrix, RowOpTrace]:
    """Row-reduce ``m`` to echelon form (reduced if ``full``)."""
    if m.n_rows == 0 or m.n_cols == 0:
        raise ValueError("gaussian_elimination needs a nonempty matrix")
    out = m.copy()
    rows = out._rows
    trace = RowOpTrace()
    pivot_row = 0
    for col in range(out.n_cols):
        if pivot_row == out.n_rows:
            break
        bit = 1 << col
        src = next((r for r in range(pivot_row, out.n_rows) if rows[r] & bit), None)
        if src is None:
            continue
        if src != pivot_row:
            rows[src], rows[pivot_row] = rows[pivot_row], rows[src]
            trace.swap(src, pivot_row)
        start = 0 if full else pivot_row + 1
        for r in range(start, out.n_rows):
            if r != pivot_row and rows[r] & bit:
                rows[r] ^= rows[pivot_row]
                trace.add(pivot_row, r)
        pivot_row += 1
    return out, trace


def rank(m: BooleanMatrix) -> int:
    if m.n_rows == 0 or m.n_cols == 0:
        return 0
    reduced, _ = gaussian_elimination(m)
    return sum(1 for r in reduced._rows if r)


def _rref_with_pivots(m: BooleanMatrix) -> tuple[BooleanMatrix, list[int]]:
    reduced, _ = gaussian_elimination(m, full=True)
    pivots = []
    for r in reduced._rows:
        if not r:
            break
        pivots.append((r & -r).bit_length() - 1)
    return reduced, pivots


def solve(m: BooleanMatrix, b: Sequence[int]) -> BitVector | None:
    """Return some ``x`` with ``m @ x == b``, or ``None`` if inconsistent."""
    if len(b) != m.n_rows:
        raise ValueError(f"right-hand side has length {len(b)}, expected {m.n_rows}")
    if m.n_cols == 0:
        return [] if not any(x & 1 for x in b) else None
    if m.n_rows == 0:
        return [0] * m.n_cols
    aug = BooleanMatrix(m.n_rows, m.n_cols + 1,
                        [row | ((b[i] & 1) << m.n_cols) for i, row in enumerate(m._rows)])
    reduced, pivots = _rref_with_pivots(aug)
    if m.n_cols in pivots:
        return None
    x = [0] * m.n_cols
    for r, p in enumerate(pivots):
        x[p] = (reduced._rows[r] >> m.n_cols) & 1
    return x


def kernel_basis(m: BooleanMatrix) -> list[BitVector]:
    """Basis of ``{v : m @ v = 0}``, one vector per free column in index order."""
    if m.n_cols == 0:
        return []
    if m.n_rows == 0:
        return [[int(i == j) for i in range(m.n_cols)] for j in range(m.n_cols)]
    reduced, pivots = _rref_with_pivots(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.n_cols):
        if free in pivot_set:
            continue
        v = [0] * m.n_cols
        v[free] = 1
        for r, p in enumerate(pivots):
            if (reduced._rows[r] >> free) & 1:
                v[p] = 1
        basis.append(v)
    return basis


def inverse(m: BooleanMatrix) -> BooleanMatrix:
    """Inverse of a square invertible matrix."""
    n = m.n_rows
    if n != m.n_cols:
        raise ValueError("inverse needs a square matrix")
    if n == 0:
        return BooleanMatrix(0, 0)
    aug = BooleanMatrix(n, 2 * n, [row | (1 << (n + i)) for i, row in enumerate(m._rows)])
    reduced, pivots = _rref_with_pivots(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ValueError("matrix is singular")
    return BooleanMatrix(n, n, [row >> n for row in reduced._rows])
