"""Coupling graphs of physical devices."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from pathlib import Path


class DeviceFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


def bfs_distances(n: int, adjacency: list[list[int]]) -> list[list[int]]:
    """All-pairs hop counts; unreachable pairs get ``-1``."""
    out = []
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in adjacency[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        out.append(dist)
    return out


@dataclass
class Device:
    name: str
    n_physical: int
    edges: frozenset[tuple[int, int]]
    distances: list[list[int]] = field(init=False, repr=False)
    adjacency: list[list[int]] = field(init=False, repr=False)

    def __post_init__(self):
        norm = set()
        for u, v in self.edges:
            if u == v or not (0 <= u < self.n_physical and 0 <= v < self.n_physical):
                raise ValueError(f"bad edge {u}-{v} for {self.n_physical} qubits")
            norm.add((min(u, v), max(u, v)))
        self.edges = frozenset(norm)
        self.adjacency = [[] for _ in range(self.n_physical)]
        for u, v in sorted(self.edges):
            self.adjacency[u].append(v)
            self.adjacency[v].append(u)
        for row in self.adjacency:
            row.sort()
        self.distances = bfs_distances(self.n_physical, self.adjacency)
        if self.n_physical and any(d < 0 for d in self.distances[0]):
            raise ValueError(f"device {self.name!r} has a disconnected coupling graph")

    @classmethod
    def from_edges(cls, name: str, n: int, edges) -> Device:
        return cls(name, n, frozenset(tuple(e) for e in edges))

    def adjacent(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def distance(self, u: int, v: int) -> int:
        return self.distances[u][v]

    def neighbors(self, u: int) -> list[int]:
        return self.adjacency[u]

    def next_hop(self, u: int, v: int) -> int:
        """Lowest-index neighbor of ``u`` on a shortest path to ``v``."""
        for w in self.adjacency[u]:
            if self.distances[w][v] == self.distances[u][v] - 1:
                return w
        raise ValueError(f"no path from {u} to {v}")

    def __str__(self) -> str:
        return f"Device {self.name}: {self.n_physical} qubits, {len(self.edges)} edges"


def parse_device(text: str) -> Device:
    header = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 3 or parts[0] != "device-v1":
                raise DeviceFormatError("expected header 'device-v1 <name> <n_physical>'", lineno)
            try:
                n = int(parts[2])
            except ValueError:
                raise DeviceFormatError(f"bad qubit count {parts[2]!r}", lineno) from None
            if n <= 0:
                raise DeviceFormatError("qubit count must be positive", lineno)
            header = (parts[1], n)
            continue
        if len(parts) != 2:
            raise DeviceFormatError(f"expected an edge 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise DeviceFormatError(f"bad edge {line!r}", lineno) from None
        if not (0 <= u < header[1] and 0 <= v < header[1]) or u == v:
            raise DeviceFormatError(f"edge {u}-{v} out of range", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DeviceFormatError(f"duplicate edge {u}-{v}", lineno)
        seen.add(key)
        edges.append(key)
    if header is None:
        raise DeviceFormatError("empty device description")
    try:
        return Device(header[0], header[1], frozenset(edges))
    except ValueError as exc:
        raise DeviceFormatError(str(exc)) from None


def read_device_file(path: str | Path) -> Device:
    return parse_device(Path(path).read_text())


def write_device(d: Device) -> str:
    lines = [f"device-v1 {d.name} {d.n_physical}"]
    lines += [f"{u} {v}" for u, v in sorted(d.edges)]
    return "\n".join(lines) + "\n"


# convenience constructors

def line_device(n: int) -> Device:
    return Device.from_edges(f"line{n}", n, [(i, i + 1) for i in range(n - 1)])


def complete_device(n: int) -> Device:
    return Device.from_edges(f"complete{n}", n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_device(n: int) -> Device:
    return Device.from_edges(f"star{n}", n, [(0, i) for i in range(1, n)])


def t_device() -> Device:
    """Five qubits: a three-qubit bar with a two-qubit stem below its middle."""
    return Device.from_edges("tee5", 5, [(0, 1), (1, 2), (1, 3), (3, 4)])


# coupling map of the 27-qubit heavy-hexagon (Falcon) layout
_HEAVY_HEX_27 = [
    (0, 1), (1, 2), (1, 4), (2, 3), (3, 5), (4, 7), (5, 8), (6, 7), (7, 10), (8, 9),
    (8, 11), (10, 12), (11, 14), (12, 13), (12, 15), (13, 14), (14, 16), (15, 18),
    (16, 19), (17, 18), (18, 21), (19, 20), (19, 22), (21, 23), (22, 25), (23, 24),
    (24, 25), (25, 26),
]


def heavy_hex_device(n: int = 27) -> Device:
    """The first ``n`` qubits of the heavy-hexagon layout (connected prefixes only)."""
    if not 1 <= n <= 27:
        raise ValueError("heavy-hex prefix must have 1..27 qubits")
    edges = [(u, v) for u, v in _HEAVY_HEX_27 if u < n and v < n]
    return Device.from_edges(f"heavyhex{n}", n, edges)
