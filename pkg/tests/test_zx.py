import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from conftest import oracle_unitary, proportional, same_up_to_phase, zx_oracle
from qsynth.circuit import Gate, Phase, QuantumCircuit, statistics
from qsynth.circuit.gates import CX, H, RZ, T
from qsynth.circuit.random import random_circuit, random_clifford, random_clifford_t
from qsynth.tensor import unitary_of_zx
from qsynth.zx import (
    EdgeType,
    VertexType,
    ZXDiagram,
    extract_circuit,
    from_circuit,
    full_reduce,
    parse_zx,
    to_graph_like,
    write_zx,
)
from qsynth.zx import rules
from qsynth.zx.extract import cz_count

EXTRACT_KINDS = {"h", "cx", "cz", "rz", "x", "z", "swap"}

small_circuits = st.builds(
    lambda n, m, s: random_circuit(n, m, s), st.integers(1, 3), st.integers(0, 10), st.integers(0, 10 ** 6))


def same_map(d: ZXDiagram, c: QuantumCircuit) -> bool:
    return same_up_to_phase(unitary_of_zx(d).matrix, oracle_unitary(c))


def diagram_of(d: ZXDiagram) -> np.ndarray:
    return unitary_of_zx(d).matrix


class TestFromCircuit:

    def test_single_h(self):
        d = from_circuit(QuantumCircuit(1, [H(0)]))
        assert d.spiders() == []
        (u, v, et), = d.edges()
        assert {u, v} == {d.inputs[0], d.outputs[0]}
        assert et == EdgeType.HADAMARD

    def test_single_rz(self):
        d = from_circuit(QuantumCircuit(1, [RZ(0, Phase(1, 3))]))
        (v,) = d.spiders()
        assert d.type(v) == VertexType.Z
        assert d.phase(v) == Phase(1, 3)
        assert set(d.neighbors(v)) == {d.inputs[0], d.outputs[0]}

    def test_cx(self):
        c = QuantumCircuit(2, [CX(0, 1)])
        d = from_circuit(c)
        z = [v for v in d.spiders() if d.type(v) == VertexType.Z]
        x = [v for v in d.spiders() if d.type(v) == VertexType.X]
        assert len(z) == len(x) == 1
        assert d.qubit(z[0]) == 0 and d.qubit(x[0]) == 1
        assert d.edge_type(z[0], x[0]) == EdgeType.SIMPLE
        assert proportional(zx_oracle(d), oracle_unitary(c))

    @pytest.mark.parametrize("qubits", [(0, 1, 2), (2, 1, 0), (0, 1, 2, 3)])
    def test_multi_controlled(self, qubits):
        n = len(qubits)
        kind = "ccx" if n == 3 else "mcx"
        c = QuantumCircuit(n, [Gate(kind, qubits)])
        assert same_map(from_circuit(c), c)

    @settings(max_examples=40, deadline=None)
    @given(small_circuits)
    def test_boundaries(self, c):
        d = from_circuit(c)
        assert len(d.inputs) == len(d.outputs) == c.n_qubits
        for b in d.inputs + d.outputs:
            assert d.degree(b) == 1


class TestGraphLike:

    def test_color_change(self):
        d = from_circuit(QuantumCircuit(2, [CX(0, 1)]))
        g = to_graph_like(d)
        assert g.is_graph_like()
        assert all(g.type(v) == VertexType.Z for v in g.spiders())
        assert proportional(diagram_of(g), diagram_of(d))

    def test_idempotent(self):
        g = to_graph_like(from_circuit(random_clifford_t(3, 15, 3)))
        assert write_zx(to_graph_like(g)) == write_zx(g)

    @pytest.mark.parametrize("seed", range(10))
    def test_semantics(self, seed):
        c = random_clifford_t(4, 20, seed)
        g = to_graph_like(from_circuit(c))
        cert = g.certificate()
        assert cert.only_z_spiders and cert.only_hadamard_internal_edges and cert.boundaries_simple
        assert same_map(g, c)


def _rule_sites(d: ZXDiagram):
    """Every (name, apply) pair for the basic rules that match somewhere in ``d``."""
    sites = []
    for v in d.spiders():
        if rules.is_identity(d, v):
            sites.append(("identity", lambda e, v=v: rules.remove_identity(e, v)))
        if rules.can_lcomp(d, v) and not rules.boundary_neighbors(d, v):
            sites.append(("lcomp", lambda e, v=v: rules.lcomp(e, v)))
        for w in d.neighbors(v):
            if v < w and rules.can_fuse(d, v, w):
                sites.append(("fuse", lambda e, v=v, w=w: rules.fuse(e, v, w)))
            if v < w and rules.pivot_candidate(d, v, w) is not None:
                sites.append(("pivot", lambda e, v=v, w=w: rules.pivot(e, v, w)))
    return sites


class TestRules:

    def test_fusion_adds_phases(self):
        d = ZXDiagram()
        i = d.add_vertex(VertexType.BOUNDARY, qubit=0)
        a = d.add_vertex(VertexType.Z, Phase(1, 4), qubit=0)
        b = d.add_vertex(VertexType.Z, Phase(1, 2), qubit=0)
        o = d.add_vertex(VertexType.BOUNDARY, qubit=0)
        d.add_edge(i, a)
        d.add_edge(a, b)
        d.add_edge(b, o)
        d.inputs, d.outputs = [i], [o]
        before = diagram_of(d)
        rules.fuse(d, a, b)
        assert d.spiders() == [a]
        assert d.phase(a) == Phase(3, 4)
        assert proportional(diagram_of(d), before)

    def test_parallel_hadamard_edges_cancel(self):
        d = ZXDiagram()
        a = d.add_vertex(VertexType.Z)
        b = d.add_vertex(VertexType.Z)
        d.add_edge_smart(a, b, EdgeType.HADAMARD)
        d.add_edge_smart(a, b, EdgeType.HADAMARD)
        assert not d.connected(a, b)

    def test_hadamard_self_loop_adds_pi(self):
        d = ZXDiagram()
        a = d.add_vertex(VertexType.Z, Phase(1, 4))
        d.add_edge_smart(a, a, EdgeType.HADAMARD)
        assert d.phase(a) == Phase(5, 4)
        assert d.degree(a) == 0

    @settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
    @given(small_circuits)
    def test_each_step_preserves_semantics(self, c):
        g = to_graph_like(from_circuit(c))
        reference = diagram_of(g)
        for name, apply in _rule_sites(g):
            e = g.copy()
            apply(e)
            assert proportional(diagram_of(e), reference, tol=1e-9), name
            for u, v, _ in e.edges():
                assert u != v


class TestFullReduce:

    def test_hh_becomes_bare_wire(self):
        d = full_reduce(from_circuit(QuantumCircuit(1, [H(0), H(0)])))
        assert d.spiders() == []
        assert d.connected(d.inputs[0], d.outputs[0])
        assert d.edge_type(d.inputs[0], d.outputs[0]) == EdgeType.SIMPLE

    @pytest.mark.parametrize("seed", range(15))
    def test_clifford_has_no_internal_non_clifford(self, seed):
        c = random_clifford(5, 40, seed)
        d = full_reduce(from_circuit(c))
        assert d.non_clifford_count() == 0
        assert same_map(d, c)

    @pytest.mark.parametrize("seed", range(15))
    def test_non_clifford_count_never_increases(self, seed):
        c = random_clifford_t(4, 30, seed)
        g = to_graph_like(from_circuit(c))
        d = full_reduce(g)
        assert d.non_clifford_count() <= g.non_clifford_count()
        assert same_map(d, c)

    def test_early_stop_preserves_semantics(self):
        c = random_clifford_t(4, 40, 11)
        assert same_map(full_reduce(from_circuit(c), early_stop=True), c)


class TestExtract:

    def test_bare_wires(self):
        d = full_reduce(from_circuit(QuantumCircuit(2)))
        assert extract_circuit(d).gates == []

    def test_single_t_spider(self):
        d = full_reduce(from_circuit(QuantumCircuit(1, [T(0)])))
        out = extract_circuit(d)
        assert statistics(out).t_count == 1
        assert len(out) == 1

    def test_rejects_non_graph_like(self):
        with pytest.raises(ValueError):
            extract_circuit(from_circuit(QuantumCircuit(2, [CX(0, 1)])))

    @pytest.mark.parametrize("seed", range(25))
    def test_pipeline(self, seed):
        c = random_clifford_t(5, 35, seed)
        out = extract_circuit(full_reduce(from_circuit(c)))
        assert {g.kind for g in out.gates} <= EXTRACT_KINDS
        assert statistics(out).t_count <= statistics(c).t_count
        assert same_up_to_phase(oracle_unitary(out), oracle_unitary(c))

    def test_best_strategy_never_worse_than_naive(self, small_corpus):
        for c in small_corpus[:30]:
            d = full_reduce(from_circuit(c))
            assert cz_count(extract_circuit(d, "best")) <= cz_count(extract_circuit(d, "naive"))


class TestTextFormat:

    def test_round_trip(self):
        d = full_reduce(from_circuit(random_clifford_t(3, 20, 5)))
        text = write_zx(d)
        assert text.startswith("zx-v1\n")
        e = parse_zx(text)
        assert write_zx(e) == text
        assert proportional(diagram_of(e), diagram_of(d))

    def test_missing_header(self):
        with pytest.raises(ValueError):
            parse_zx("inputs 0\n")
