from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import BENCHMARKS, assert_equivalent, oracle_unitary, same_up_to_phase
from qsynth.circuit import (
    Gate,
    Phase,
    QasmError,
    QuantumCircuit,
    adjoint,
    basic_optimize,
    compose,
    decompose_multi_controlled,
    parse_qasm,
    statistics,
    write_qasm,
)
from qsynth.circuit.gates import CX, H, RZ, S, T, Tdg
from qsynth.circuit.random import random_circuit, random_clifford_t

ALL_1Q = ("h", "s", "sdg", "t", "tdg", "x", "y", "z", "sx", "sxdg")

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=64)
phases = fractions.map(Phase)
circuits = st.builds(
    lambda n, m, seed: random_circuit(n, m, seed, one_qubit=ALL_1Q, two_qubit=("cx", "cz", "swap")),
    st.integers(1, 4), st.integers(0, 25), st.integers(0, 10 ** 6))


class TestPhase:

    def test_normalized_and_reduced(self):
        p = Phase(-2, 8)
        assert (p.numerator, p.denominator) == (7, 4)
        assert Phase(4) == Phase(0)

    @given(phases, phases, phases)
    def test_addition_is_associative(self, a, b, c):
        assert (a + b) + c == a + (b + c)

    @given(phases)
    def test_inverse(self, a):
        assert a + (-a) == Phase(0)
        assert (a - a).is_zero()

    @given(fractions)
    def test_range(self, f):
        p = Phase(f)
        assert 0 <= p.fraction < 2
        assert (p.fraction - f) % 2 == 0

    @pytest.mark.parametrize("num,den,clifford,tlike", [
        (0, 1, True, False), (1, 2, True, False), (1, 1, True, False), (3, 2, True, False),
        (1, 4, False, True), (7, 4, False, True), (1, 8, False, False),
    ])
    def test_classification(self, num, den, clifford, tlike):
        p = Phase(num, den)
        assert p.is_clifford() == clifford
        assert p.is_t_like() == tlike

    @pytest.mark.parametrize("text,value", [
        ("pi/4", Fraction(1, 4)), ("3*pi/4", Fraction(3, 4)), ("-pi/8", Fraction(15, 8)),
        ("pi", Fraction(1)), ("0", Fraction(0)), ("2*pi/3", Fraction(2, 3)),
    ])
    def test_parse(self, text, value):
        assert Phase.parse(text).fraction == value

    def test_float_literal_is_snapped(self):
        assert Phase.parse("0.7853981633974483") == Phase(1, 4)


class TestQasm:

    def test_bell(self):
        c = parse_qasm("OPENQASM 2.0;\nqreg q[2];\nh q[0];\ncx q[0],q[1];\n")
        assert c.n_qubits == 2
        assert c.gates == [H(0), CX(0, 1)]

    def test_t_and_tdg_count(self):
        c = parse_qasm("qreg q[1]; t q[0]; tdg q[0];")
        assert len(c) == 2
        assert statistics(c).t_count == 2

    def test_u1_becomes_rz(self):
        c = parse_qasm("qreg q[1]; u1(pi/2) q[0];")
        assert c.gates == [RZ(0, Phase(1, 2))]

    def test_unknown_gate_names_line(self):
        with pytest.raises(QasmError) as info:
            parse_qasm("OPENQASM 2.0;\nqreg q[1];\nfoo q[0];\n")
        assert info.value.line == 3
        assert "foo" in str(info.value)

    @pytest.mark.parametrize("text", [
        "qreg q[1]; h q[1];",
        "qreg q[1]; qreg r[1];",
        "qreg q[2]; cx q[0];",
        "qreg q[1]; h q[0]",
        "h q[0];",
    ])
    def test_errors(self, text):
        with pytest.raises(QasmError):
            parse_qasm(text)

    def test_creg_and_measure_are_skipped(self):
        c = parse_qasm("qreg q[1]; creg c[1]; h q[0]; measure q[0] -> c[0];")
        assert c.gates == [H(0)]

    def test_write_empty(self):
        text = write_qasm(QuantumCircuit(1))
        assert text.splitlines() == ["OPENQASM 2.0;", 'include "qelib1.inc";', "qreg q[1];"]

    def test_write_t_and_rational_rz(self):
        text = write_qasm(QuantumCircuit(1, [T(0), RZ(0, Phase(3, 4))]))
        assert "t q[0];" in text
        assert "rz(3*pi/4) q[0];" in text

    @settings(max_examples=100)
    @given(circuits)
    def test_round_trip(self, c):
        assert parse_qasm(write_qasm(c)).gates == c.gates

    @pytest.mark.parametrize("path", sorted(BENCHMARKS.glob("*.qasm")), ids=lambda p: p.stem)
    def test_bundled_benchmarks_parse(self, path):
        c = parse_qasm(path.read_text())
        assert parse_qasm(write_qasm(c)).gates == c.gates


class TestAdjointCompose:

    def test_adjoint_reverses_and_inverts(self):
        assert adjoint(QuantumCircuit(1, [H(0), T(0)])).gates == [Tdg(0), H(0)]

    def test_self_inverse(self):
        assert adjoint(QuantumCircuit(2, [CX(0, 1)])).gates == [CX(0, 1)]

    @given(circuits)
    def test_involution(self, c):
        assert adjoint(adjoint(c)).gates == c.gates

    @settings(max_examples=40)
    @given(circuits)
    def test_adjoint_unitary(self, c):
        u = oracle_unitary(c)
        assert np.allclose(oracle_unitary(adjoint(c)), u.conj().T, atol=1e-9)

    def test_compose_length_and_identity(self):
        c = random_clifford_t(3, 12, seed=4)
        assert len(compose(c, adjoint(c))) == 2 * len(c)
        assert compose(QuantumCircuit(3), c).gates == c.gates

    def test_compose_mismatch(self):
        with pytest.raises(ValueError):
            compose(QuantumCircuit(2), QuantumCircuit(3))

    @pytest.mark.parametrize("seed", range(10))
    def test_compose_operator_order(self, seed):
        a = random_clifford_t(3, 10, seed)
        b = random_clifford_t(3, 10, seed + 100)
        expected = oracle_unitary(b) @ oracle_unitary(a)
        assert np.allclose(oracle_unitary(compose(a, b)), expected, atol=1e-9)


class TestStatistics:

    def test_counts(self):
        s = statistics(QuantumCircuit(2, [H(0), T(0), T(0), CX(0, 1)]))
        assert (s.t_count, s.h_count, s.two_qubit_count) == (2, 1, 1)

    def test_single_cx_delay(self):
        s = statistics(QuantumCircuit(2, [CX(0, 1)]))
        assert (s.depth, s.delay) == (1, 2)

    def test_parallel_wires(self):
        assert statistics(QuantumCircuit(2, [H(0), H(1)])).depth == 1

    def test_rz_count_excludes_clifford_angles(self):
        c = QuantumCircuit(1, [RZ(0, Phase(1, 2)), RZ(0, Phase(1, 8)), T(0)])
        s = statistics(c)
        assert (s.rz_count, s.t_count) == (2, 1)

    @given(circuits)
    def test_depth_bounds(self, c):
        s = statistics(c)
        assert s.depth <= s.gate_count
        assert s.delay >= s.depth


class TestBasicOptimize:

    def test_hh_cancels(self):
        assert basic_optimize(QuantumCircuit(1, [H(0), H(0)])).gates == []

    def test_tt_fuses_to_s(self):
        assert basic_optimize(QuantumCircuit(1, [T(0), T(0)])).gates == [S(0)]

    @pytest.mark.parametrize("seed", range(20))
    def test_random_five_qubit(self, seed):
        c = random_clifford_t(5, 40, seed)
        out = basic_optimize(c)
        assert_equivalent(c, out)

    @settings(max_examples=60)
    @given(circuits)
    def test_never_increases_costs(self, c):
        before, after = statistics(c), statistics(basic_optimize(c))
        assert same_up_to_phase(oracle_unitary(c), oracle_unitary(basic_optimize(c)))
        assert after.t_count <= before.t_count
        assert after.rz_count <= before.rz_count
        assert after.two_qubit_count <= before.two_qubit_count
        assert after.gate_count <= before.gate_count


class TestMultiControlled:

    @pytest.mark.parametrize("qubits", [(0, 1, 2), (2, 0, 1), (0, 1, 2, 3), (3, 1, 0, 2, 4)])
    def test_decomposition_matches_oracle(self, qubits):
        n = max(qubits) + 1
        kind = "ccx" if len(qubits) == 3 else "mcx"
        c = QuantumCircuit(n, [Gate(kind, qubits)])
        out = decompose_multi_controlled(c)
        assert all(len(g.qubits) <= 2 for g in out.gates)
        assert_equivalent(c, out)

    def test_ccz_has_seven_t(self):
        c = decompose_multi_controlled(QuantumCircuit(3, [Gate("ccz", (0, 1, 2))]))
        assert statistics(c).t_count == 7


def test_gate_validation():
    with pytest.raises(ValueError):
        Gate("cx", (0, 0))
    with pytest.raises(ValueError):
        Gate("h", (0, 1))
    with pytest.raises(ValueError):
        QuantumCircuit(1, [CX(0, 1)])
