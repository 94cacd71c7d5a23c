import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import oracle_unitary, same_up_to_phase
from qsynth.circuit import QuantumCircuit
from qsynth.circuit.gates import S
from qsynth.tableau import (
    CliffordTableau,
    NotProperError,
    PhasePolynomial,
    SignatureMismatchError,
    apply_clifford_correction,
    properize,
    signature,
    todd,
    todd_once,
)
from qsynth.tableau.phasepoly import ccz_polynomial


def polys(n_max=4, m_max=10, proper=False):
    coeff = st.sampled_from([1, 3, 5, 7]) if proper else st.integers(0, 7)
    return st.integers(2, n_max).flatmap(lambda n: st.lists(
        st.tuples(st.integers(1, (1 << n) - 1), coeff), max_size=m_max).map(
        lambda terms: PhasePolynomial.from_terms(n, terms)))


def pair_matrix(cliff: CliffordTableau, poly: PhasePolynomial) -> np.ndarray:
    """The diagonal acts first, then the Clifford."""
    return oracle_unitary(cliff.to_circuit()) @ np.diag(poly.diagonal())


def direct_signature(poly: PhasePolynomial) -> np.ndarray:
    n = poly.n
    sig = np.zeros((n, n, n), dtype=int)
    for v in poly.columns:
        col = [(v >> q) & 1 for q in range(n)]
        for a, b, c in itertools.product(range(n), repeat=3):
            sig[a, b, c] ^= col[a] & col[b] & col[c]
    return sig


def fitted_signature(poly: PhasePolynomial) -> np.ndarray:
    """Signature read off the multilinear expansion of the phase function over Z8."""
    n = poly.n
    f = {x: poly.evaluate(x) for x in range(1 << n)}
    coef = {}
    for s in range(1 << n):
        total = 0
        sub = s
        while True:
            total += (-1) ** (bin(s).count("1") - bin(sub).count("1")) * f[sub]
            if sub == 0:
                break
            sub = (sub - 1) & s
        coef[s] = total % 8
    sig = np.zeros((n, n, n), dtype=int)
    for a, b, c in itertools.product(range(n), repeat=3):
        s = (1 << a) | (1 << b) | (1 << c)
        k = bin(s).count("1")
        sig[a, b, c] = (coef[s] >> (k - 1)) & 1
    return sig


class TestPolynomial:

    def test_rejects_zero_column(self):
        with pytest.raises(ValueError):
            PhasePolynomial(2, (0,), (1,))

    def test_rejects_wide_column(self):
        with pytest.raises(ValueError):
            PhasePolynomial(2, (4,), (1,))

    def test_coeffs_mod_8(self):
        assert PhasePolynomial(1, (1,), (9,)).coeffs == (1,)

    def test_gadget_matrix(self):
        p = PhasePolynomial.from_terms(3, [((0, 2), 1), ((1,), 3)])
        assert p.gadgets.to_lists() == [[1, 0], [0, 1], [1, 0]]

    @settings(max_examples=40)
    @given(polys())
    def test_circuit_matches_diagonal(self, p):
        assert same_up_to_phase(oracle_unitary(p.to_circuit()), np.diag(p.diagonal()))


class TestSignature:

    def test_empty(self):
        assert not signature(PhasePolynomial(3)).any()

    def test_single_column(self):
        sig = signature(PhasePolynomial.from_terms(3, [((1,), 1)]))
        assert sig[1, 1, 1] == 1
        assert sig.sum() == 1

    def test_ccz_matches_fitted_cubic(self):
        p = ccz_polynomial(3, (0, 1, 2))
        assert np.array_equal(signature(p), fitted_signature(p))
        assert signature(p)[0, 1, 2] == 1

    def test_requires_proper(self):
        with pytest.raises(NotProperError):
            signature(PhasePolynomial.from_terms(2, [((0,), 2)]))

    @given(polys(proper=True))
    def test_matches_direct_and_fitted(self, p):
        sig = signature(p)
        assert np.array_equal(sig, direct_signature(p))
        assert np.array_equal(sig, fitted_signature(p))

    @given(polys(proper=True), st.randoms(use_true_random=False))
    def test_invariant_under_reordering_and_clifford_shift(self, p, rnd):
        order = list(range(len(p)))
        rnd.shuffle(order)
        shuffled = PhasePolynomial(p.n, tuple(p.columns[i] for i in order),
                                   tuple((p.coeffs[i] + 2 * rnd.randint(0, 3)) for i in order))
        assert np.array_equal(signature(shuffled), signature(p))


class TestProperize:

    def test_s_angle_absorbed(self):
        p = PhasePolynomial.from_terms(1, [((0,), 2)])
        cliff, out = properize(CliffordTableau.identity(1), p)
        assert len(out) == 0
        assert cliff == CliffordTableau.from_circuit(QuantumCircuit(1, [S(0)]))

    def test_duplicate_columns_merge(self):
        p = PhasePolynomial.from_terms(2, [((0, 1), 1), ((0, 1), 1)])
        cliff, out = properize(CliffordTableau.identity(2), p)
        assert len(out) == 0
        assert same_up_to_phase(pair_matrix(cliff, out), pair_matrix(CliffordTableau.identity(2), p))

    def test_empty(self):
        cliff, out = properize(CliffordTableau.identity(2), PhasePolynomial(2))
        assert cliff.is_identity() and len(out) == 0

    @settings(max_examples=80, deadline=None)
    @given(polys(n_max=3, m_max=12))
    def test_semantics(self, p):
        start = CliffordTableau.identity(p.n)
        cliff, out = properize(start, p)
        assert out.is_proper()
        assert len(set(out.columns)) == len(out)
        assert same_up_to_phase(pair_matrix(cliff, out), pair_matrix(start, p))


class TestCliffordCorrection:

    def test_equal_polys(self):
        p = ccz_polynomial(3, (0, 1, 2))
        assert apply_clifford_correction(CliffordTableau.identity(3), p, p).is_identity()

    def test_merged_pair_gives_s_on_support(self):
        before = PhasePolynomial.from_terms(2, [((0, 1), 1), ((0, 1), 1)])
        cliff = apply_clifford_correction(CliffordTableau.identity(2), before, PhasePolynomial(2))
        assert same_up_to_phase(oracle_unitary(cliff.to_circuit()), np.diag(before.diagonal()))

    def test_mismatch_raises(self):
        with pytest.raises(SignatureMismatchError):
            apply_clifford_correction(CliffordTableau.identity(3), ccz_polynomial(3, (0, 1, 2)),
                                      PhasePolynomial(3))


def two_ccz() -> PhasePolynomial:
    a, b = ccz_polynomial(6, (0, 1, 2)), ccz_polynomial(6, (3, 4, 5))
    return PhasePolynomial(6, a.columns + b.columns, a.coeffs + b.coeffs)


class TestTodd:

    def test_empty(self):
        assert len(todd_once(PhasePolynomial(3))) == 0
        cliff, out = todd(CliffordTableau.identity(3), PhasePolynomial(3))
        assert cliff.is_identity() and len(out) == 0

    def test_single_ccz_stays_at_seven(self):
        p = ccz_polynomial(3, (0, 1, 2))
        assert todd_once(p) == p
        cliff, out = todd(CliffordTableau.identity(3), p)
        assert len(out) == 7
        assert same_up_to_phase(pair_matrix(cliff, out), pair_matrix(CliffordTableau.identity(3), p))

    def test_no_smaller_ccz_polynomial_exists(self):
        target = direct_signature(ccz_polynomial(3, (0, 1, 2)))
        # duplicate columns cancel in the signature, so subsets cover every multiset
        for size in range(7):
            for cols in itertools.combinations(range(1, 8), size):
                assert not np.array_equal(direct_signature(PhasePolynomial(3, cols, (1,) * size)), target)

    def test_two_ccz_reduces(self):
        p = two_ccz()
        cliff, out = todd(CliffordTableau.identity(6), p)
        assert len(out) < 14
        assert same_up_to_phase(pair_matrix(cliff, out), pair_matrix(CliffordTableau.identity(6), p))

    def test_todd_once_strictly_reduces_and_keeps_signature(self):
        p = two_ccz()
        q = todd_once(p)
        assert len(q) < len(p)
        assert np.array_equal(signature(q), signature(p))

    def test_deterministic(self):
        assert todd_once(two_ccz()) == todd_once(two_ccz())

    @settings(max_examples=80, deadline=None)
    @given(polys(n_max=4, m_max=14))
    def test_random_pairs(self, p):
        start = CliffordTableau.identity(p.n)
        proper_cliff, proper = properize(start, p)
        cliff, out = todd(start, p)
        assert out.is_proper()
        assert len(out) <= len(proper)
        assert np.array_equal(signature(out), signature(proper))
        assert same_up_to_phase(pair_matrix(cliff, out), pair_matrix(start, p))
