from .core import CircuitStats, QuantumCircuit, adjoint, compose, statistics
from .decompose import decompose_multi_controlled
from .gates import Gate, GateKind, lookup, register
from .optimize import basic_optimize
from .phase import Phase
from .qasm import QasmError, parse_qasm, read_qasm_file, write_qasm

__all__ = [
    "CircuitStats",
    "Gate",
    "GateKind",
    "Phase",
    "QasmError",
    "QuantumCircuit",
    "adjoint",
    "basic_optimize",
    "compose",
    "decompose_multi_controlled",
    "lookup",
    "parse_qasm",
    "read_qasm_file",
    "register",
    "statistics",
    "write_qasm",
]
