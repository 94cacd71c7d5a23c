"""OpenQASM 2.0 subset reader and writer."""

from __future__ import annotations

import logging
import re

from .core import QuantumCircuit
from .gates import Gate, lookup
from .phase import Phase

log = logging.getLogger(__name__)

# token -> (kind, parametric)
_TOKENS = {
    "h": "h", "x": "x", "y": "y", "z": "z", "s": "s", "sdg": "sdg", "t": "t", "tdg": "tdg",
    "sx": "sx", "sxdg": "sxdg", "rz": "rz", "rx": "rx", "u1": "rz", "cx": "cx", "CX": "cx",
    "cz": "cz", "swap": "swap", "ccx": "ccx", "ccz": "ccz", "mcx": "mcx", "c3x": "mcx", "c4x": "mcx",
}
_FIXED_ARITY = {"c3x": 4, "c4x": 5}
_SKIPPED = {"creg", "measure", "barrier", "reset"}

_STMT = re.compile(
    r"(?P<name>[A-Za-z_][A-Za-z0-9_]*)\s*(?:\((?P<params>[^)]*)\))?\s*(?P<args>.*)$", re.S)
_ARG = re.compile(r"^\s*(?P<reg>[A-Za-z_][A-Za-z0-9_]*)\s*\[\s*(?P<idx>\d+)\s*\]\s*$")


class QasmError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


def _strip_comments(text: str) -> str:
    # keep offsets stable by blanking comment text
    return re.sub(r"//[^\n]*", lambda m: " " * len(m.group()), text)


def _position(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


def parse_qasm(text: str, name: str = "") -> QuantumCircuit:
    clean = _strip_comments(text)
    circuit: QuantumCircuit | None = None
    reg_name = None
    pos = 0
    saw_header = False
    while True:
        end = clean.find(";", pos)
        chunk = clean[pos:] if end < 0 else clean[pos:end]
        lead = len(chunk) - len(chunk.lstrip())
        start = pos + lead
        stmt = chunk.strip()
        if end < 0:
            if stmt:
                raise QasmError("missing ';' at end of statement", *_position(clean, start))
            break
        pos = end + 1
        if not stmt:
            continue
        line, col = _position(clean, start)
        if stmt.startswith("OPENQASM"):
            if not re.fullmatch(r"OPENQASM\s+2(\.0)?", stmt):
                raise QasmError(f"unsupported version header {stmt!r}", line, col)
            saw_header = True
            continue
        if stmt.startswith("include"):
            continue
        m = _STMT.match(stmt)
        if m is None:
            raise QasmError(f"cannot parse statement {stmt!r}", line, col)
        word = m.group("name")
        if word == "qreg":
            rm = re.fullmatch(r"qreg\s+([A-Za-z_][A-Za-z0-9_]*)\s*\[\s*(\d+)\s*\]", stmt)
            if rm is None:
                raise QasmError(f"malformed qreg declaration {stmt!r}", line, col)
            if circuit is not None:
                raise QasmError("multiple qreg declarations are not supported", line, col)
            reg_name = rm.group(1)
            circuit = QuantumCircuit(int(rm.group(2)), name=name)
            continue
        if word in _SKIPPED:
            if word != "creg":
                log.warning("line %d: skipping unsupported statement %r", line, word)
            continue
        if word not in _TOKENS:
            raise QasmError(f"unknown gate {word!r}", line, col)
        if circuit is None:
            raise QasmError("gate before qreg declaration", line, col)
        kind = _TOKENS[word]
        spec = lookup(kind)
        param = None
        params = m.group("params")
        if spec.parametric:
            if params is None:
                raise QasmError(f"gate {word!r} needs an angle", line, col)
            try:
                param = Phase.parse(params)
            except ValueError as exc:
                raise QasmError(str(exc), line, col) from None
        elif params is not None and params.strip():
            raise QasmError(f"gate {word!r} takes no parameters", line, col)
        qubits = []
        for arg in m.group("args").split(","):
            am = _ARG.match(arg)
            if am is None:
                raise QasmError(f"malformed qubit argument {arg.strip()!r}", line, col)
            if am.group("reg") != reg_name:
                raise QasmError(f"unknown register {am.group('reg')!r}", line, col)
            q = int(am.group("idx"))
            if q >= circuit.n_qubits:
                raise QasmError(f"qubit index {q} out of range", line, col)
            qubits.append(q)
        if word in _FIXED_ARITY and len(qubits) != _FIXED_ARITY[word]:
            raise QasmError(f"gate {word!r} expects {_FIXED_ARITY[word]} qubits", line, col)
        try:
            circuit.append(Gate(kind, tuple(qubits), param))
        except ValueError as exc:
            raise QasmError(str(exc), line, col) from None
    if circuit is None:
        raise QasmError("no qreg declaration", 1, 1)
    if not saw_header:
        log.debug("QASM input has no OPENQASM header")
    return circuit


def write_qasm(c: QuantumCircuit) -> str:
    lines = ["OPENQASM 2.0;", 'include "qelib1.inc";', f"qreg q[{c.n_qubits}];"]
    for g in c.gates:
        spec = g.spec
        name = spec.qasm_name or g.kind
        args = ",".join(f"q[{q}]" for q in g.qubits)
        if g.param is not None:
            lines.append(f"{name}({g.param.qasm()}) {args};")
        else:
            lines.append(f"{name} {args};")
    return "\n".join(lines) + "\n"


def read_qasm_file(path: str) -> QuantumCircuit:
    import os

    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return parse_qasm(text, name=os.path.splitext(os.path.basename(path))[0])
