"""Bell algebra, the ideal circuit and the correction lookup."""
import numpy as np
import pytest

from stabcell import stabilizer as st


def test_bell_states_orthonormal():
    assert np.allclose(st.BELL_MATRIX.T @ st.BELL_MATRIX, np.eye(4))


def test_bell_expand_roundtrip():
    rng = np.random.default_rng(3)
    v = rng.normal(size=4) + 1j * rng.normal(size=4)
    v /= np.linalg.norm(v)
    assert np.allclose(st.bell_compose(st.bell_expand(v)), v)


@pytest.mark.parametrize(
    "label,xx_sign,zz_sign",
    [("phi+", 1, 1), ("psi+", 1, -1), ("phi-", -1, 1), ("psi-", -1, -1)],
)
def test_stabilizer_eigenrelations(label, xx_sign, zz_sign):
    coeffs = st.bell_expand(st.bell_state(label))
    assert np.allclose(st.pauli_on_bell(("X1", "X2"), coeffs), xx_sign * coeffs)
    assert np.allclose(st.pauli_on_bell(("Z1", "Z2"), coeffs), zz_sign * coeffs)


def test_pauli_on_bell_signed_permutations():
    phim = st.bell_expand(st.bell_state("phi-"))
    assert np.allclose(st.pauli_on_bell(("Z1",), phim),
                       st.bell_expand(st.bell_state("phi+")))
    assert np.allclose(st.pauli_on_bell(("X1",), phim),
                       -st.bell_expand(st.bell_state("psi-")))


def test_ideal_circuit_syndrome_structure():
    # a pure Bell input ends with the matching ancilla pattern
    for label, (anc_a, anc_b) in (
        ("phi+", (0, 0)), ("psi+", (0, 1)), ("phi-", (1, 0)), ("psi-", (1, 1))
    ):
        out = st.ideal_circuit(st.bell_expand(st.bell_state(label)))
        data = st.bell_state(label)
        expect = np.zeros(16, dtype=complex)
        for d in range(4):
            expect[anc_a * 8 + d * 2 + anc_b] = data[d]
        assert np.allclose(out, expect)


def test_circuit_by_gates_matches_closed_form():
    rng = np.random.default_rng(5)
    for _ in range(20):
        c = rng.normal(size=4) + 1j * rng.normal(size=4)
        c /= np.linalg.norm(c)
        assert np.allclose(st.circuit_by_gates(c), st.ideal_circuit(c),
                           atol=1e-14)


@pytest.mark.parametrize("target", ["phi+", "psi+"])
@pytest.mark.parametrize("syndrome", [(1, 1), (-1, 1), (1, -1), (-1, -1)])
def test_corrections_map_syndrome_bell_to_target(target, syndrome):
    ops = st.correction_for(target, syndrome)
    state = st.bell_state(st.SYNDROME_BELL[syndrome])
    corrected = st.pauli_on_data(ops, state)
    overlap = abs(np.vdot(st.bell_state(target), corrected))
    assert overlap == pytest.approx(1.0, abs=1e-14)


def test_correction_rejects_unknown_target():
    with pytest.raises(ValueError):
        st.correction_for("phi-", (1, 1))


def test_recover_product_state():
    u = st.recover_product_state()
    out = u @ np.array([1.0, 0.0, 0.0, 0.0], dtype=complex)
    assert np.allclose(out, st.bell_state("phi+"))
