import cmath

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import oracle_unitary, proportional, zx_oracle
from qsynth.circuit import Phase, QuantumCircuit, compose
from qsynth.circuit.gates import CX, H, RZ, T, X, Z
from qsynth.circuit.random import random_circuit, random_clifford_t
from qsynth.tensor import (
    QubitCapError,
    Unitary,
    equiv_up_to_global_phase,
    unitary_of_circuit,
    unitary_of_zx,
)
from qsynth.zx import VertexType, ZXDiagram, from_circuit

ALL_1Q = ("h", "s", "sdg", "t", "tdg", "x", "y", "z", "sx", "sxdg")
circuits = st.builds(
    lambda n, m, seed: random_circuit(n, m, seed, one_qubit=ALL_1Q, two_qubit=("cx", "cz", "swap")),
    st.integers(1, 4), st.integers(0, 20), st.integers(0, 10 ** 6))


def bare_wires(n: int) -> ZXDiagram:
    d = ZXDiagram()
    for q in range(n):
        i = d.add_vertex(VertexType.BOUNDARY, qubit=q)
        o = d.add_vertex(VertexType.BOUNDARY, qubit=q)
        d.add_edge(i, o)
        d.inputs.append(i)
        d.outputs.append(o)
    return d


class TestUnitaryOfCircuit:

    def test_empty(self):
        assert np.allclose(unitary_of_circuit(QuantumCircuit(1)).matrix, np.eye(2))

    def test_hh(self):
        m = unitary_of_circuit(QuantumCircuit(1, [H(0), H(0)])).matrix
        assert np.max(np.abs(m - np.eye(2))) < 1e-12

    def test_t_vs_rz_global_phase(self):
        t = unitary_of_circuit(QuantumCircuit(1, [T(0)])).matrix
        rz = unitary_of_circuit(QuantumCircuit(1, [RZ(0, Phase(1, 4))])).matrix
        assert np.allclose(t, cmath.exp(1j * np.pi / 8) * rz, atol=1e-12)

    def test_qubit_zero_is_most_significant(self):
        m = unitary_of_circuit(QuantumCircuit(2, [X(0)])).matrix
        assert m[2, 0] == 1  # |00> -> |10>

    def test_cap(self):
        with pytest.raises(QubitCapError):
            unitary_of_circuit(QuantumCircuit(11))

    @settings(max_examples=80)
    @given(circuits)
    def test_matches_independent_oracle(self, c):
        assert np.allclose(unitary_of_circuit(c).matrix, oracle_unitary(c), atol=1e-9)

    @pytest.mark.parametrize("seed", range(10))
    def test_compose_is_product(self, seed):
        a, b = random_clifford_t(4, 15, seed), random_clifford_t(4, 15, seed + 50)
        lhs = unitary_of_circuit(compose(a, b)).matrix
        rhs = unitary_of_circuit(b).matrix @ unitary_of_circuit(a).matrix
        assert np.max(np.abs(lhs - rhs)) < 1e-9


class TestEquivalence:

    def test_reflexive(self):
        u = unitary_of_circuit(random_clifford_t(3, 20, 1))
        rep = equiv_up_to_global_phase(u, u)
        assert rep.equivalent
        assert rep.fidelity == pytest.approx(1.0, abs=1e-12)

    @given(st.floats(0, 2 * np.pi))
    def test_global_phase_invariant(self, phi):
        u = unitary_of_circuit(random_clifford_t(2, 10, 7)).matrix
        assert equiv_up_to_global_phase(u, cmath.exp(1j * phi) * u).equivalent
        assert equiv_up_to_global_phase(cmath.exp(1j * phi) * u, u).equivalent

    def test_identity_vs_x(self):
        rep = equiv_up_to_global_phase(np.eye(2), unitary_of_circuit(QuantumCircuit(1, [X(0)])))
        assert not rep.equivalent
        assert rep.fidelity == pytest.approx(0.0, abs=1e-12)

    @given(st.integers(0, 1000), st.integers(0, 1000))
    def test_symmetric(self, s1, s2):
        u = unitary_of_circuit(random_clifford_t(2, 8, s1))
        v = unitary_of_circuit(random_clifford_t(2, 8, s2))
        a, b = equiv_up_to_global_phase(u, v), equiv_up_to_global_phase(v, u)
        assert a.equivalent == b.equivalent
        assert a.fidelity == pytest.approx(b.fidelity, abs=1e-12)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            equiv_up_to_global_phase(np.eye(2), np.eye(4))

    def test_non_unitary_rejected(self):
        with pytest.raises(ValueError):
            Unitary(1, np.array([[1, 1], [0, 1]], dtype=complex))


class TestUnitaryOfZX:

    def test_bare_wires(self):
        assert np.allclose(unitary_of_zx(bare_wires(2)).matrix, np.eye(4))

    @pytest.mark.parametrize("num,den", [(1, 4), (1, 2), (3, 8), (1, 1)])
    def test_single_spider(self, num, den):
        d = bare_wires(1)
        i, o = d.inputs[0], d.outputs[0]
        d.remove_edge(i, o)
        v = d.add_vertex(VertexType.Z, Phase(num, den), qubit=0)
        d.add_edge(i, v)
        d.add_edge(v, o)
        theta = Phase(num, den).radians()
        expected = np.diag([1, cmath.exp(1j * theta)])
        assert proportional(unitary_of_zx(d).matrix, expected)

    @settings(max_examples=40, deadline=None)
    @given(st.builds(lambda n, m, s: random_circuit(n, m, s, one_qubit=ALL_1Q),
                     st.integers(1, 4), st.integers(0, 15), st.integers(0, 10 ** 6)))
    def test_agrees_with_circuit_semantics(self, c):
        d = from_circuit(c)
        rep = equiv_up_to_global_phase(unitary_of_zx(d), unitary_of_circuit(c))
        assert rep.equivalent

    @pytest.mark.parametrize("gates", [[CX(0, 1)], [H(0), CX(0, 1), Z(1)], [T(1), CX(1, 0)]])
    def test_contraction_matches_brute_force(self, gates):
        d = from_circuit(QuantumCircuit(2, gates))
        assert proportional(unitary_of_zx(d).matrix, zx_oracle(d))
