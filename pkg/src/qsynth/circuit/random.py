"""Seeded random circuit generators for tests and experiments."""

from __future__ import annotations

import random

from .core import QuantumCircuit
from .gates import Gate

CLIFFORD_T_1Q = ("h", "s", "sdg", "t", "tdg", "x", "z")
CLIFFORD_1Q = ("h", "s", "sdg", "x", "y", "z")
TWO_Q = ("cx", "cz")


def random_circuit(
    n_qubits: int,
    n_gates: int,
    seed: int,
    one_qubit: tuple[str, ...] = CLIFFORD_T_1Q,
    two_qubit: tuple[str, ...] = TWO_Q,
    two_qubit_prob: float = 0.3,
) -> QuantumCircuit:
    rng = random.Random(seed)
    c = QuantumCircuit(n_qubits, name=f"random_{n_qubits}q_{n_gates}g_s{seed}")
    for _ in range(n_gates):
        if n_qubits >= 2 and rng.random() < two_qubit_prob:
            a, b = rng.sample(range(n_qubits), 2)
            c.append(Gate(rng.choice(two_qubit), (a, b)))
        else:
            c.append(Gate(rng.choice(one_qubit), (rng.randrange(n_qubits),)))
    return c


def random_clifford_t(n_qubits: int, n_gates: int, seed: int) -> QuantumCircuit:
    return random_circuit(n_qubits, n_gates, seed)


def random_clifford(n_qubits: int, n_gates: int, seed: int) -> QuantumCircuit:
    return random_circuit(n_qubits, n_gates, seed, one_qubit=CLIFFORD_1Q)


def fuzz_corpus(size: int = 200, base_seed: int = 2024) -> list[QuantumCircuit]:
    """Random Clifford+T circuits with 3-6 qubits and 10-40 gates."""
    rng = random.Random(base_seed)
    corpus = []
    for i in range(size):
        n = rng.randint(3, 6)
        m = rng.randint(10, 40)
        corpus.append(random_clifford_t(n, m, seed=base_seed * 1000 + i))
    return corpus
