"""
Ideal X/Z stabilizer circuit on the Bell basis, Pauli algebra and the
error-correction lookup.

The two data qubits are stabilized in simultaneous eigenstates of X⁽¹⁾X⁽²⁾
and Z⁽¹⁾Z⁽²⁾, i.e. the Bell states.  Ancilla A measures the X parity, ancilla
B the Z parity; the measurement pair (m_a, m_b) ∈ {±1}² is the error
syndrome, with outcome +1 ↔ ancilla |0⟩ and −1 ↔ ancilla |1⟩.

Four-qubit states are ordered (ancilla A, data 1, data 2, ancilla B).
"""
from __future__ import annotations

import numpy as np

SQRT1_2 = 1.0 / np.sqrt(2.0)

#: Bell labels in fixed order, matching the coefficient order (A+, B+, A-, B-)
BELL_LABELS = ("phi+", "psi+", "phi-", "psi-")

#: Bell states as columns in the computational basis {|00⟩,|01⟩,|10⟩,|11⟩}
BELL_MATRIX = np.array(
    [
        [SQRT1_2, 0.0, SQRT1_2, 0.0],
        [0.0, SQRT1_2, 0.0, SQRT1_2],
        [0.0, SQRT1_2, 0.0, -SQRT1_2],
        [SQRT1_2, 0.0, -SQRT1_2, 0.0],
    ]
)

#: syndrome (m_a, m_b) → Bell state the ideal circuit projects onto
SYNDROME_BELL = {
    (1, 1): "phi+",
    (1, -1): "psi+",
    (-1, 1): "phi-",
    (-1, -1): "psi-",
}

_X = np.array([[0.0, 1.0], [1.0, 0.0]])
_Z = np.array([[1.0, 0.0], [0.0, -1.0]])
_I2 = np.eye(2)
_H = np.array([[1.0, 1.0], [1.0, -1.0]]) * SQRT1_2

#: single-qubit Pauli operators on the two-data-qubit space
PAULI_OPS = {
    "X1": np.kron(_X, _I2),
    "X2": np.kron(_I2, _X),
    "Z1": np.kron(_Z, _I2),
    "Z2": np.kron(_I2, _Z),
}


def bell_state(label: str) -> np.ndarray:
    """Computational-basis amplitudes of the named Bell state."""
    return BELL_MATRIX[:, BELL_LABELS.index(label)].astype(complex)


def bell_expand(amplitudes: np.ndarray) -> np.ndarray:
    """Expand a two-qubit computational-basis vector over the Bell states.

    Returns coefficients in BELL_LABELS order; the map is orthogonal, so it
    round-trips exactly up to float rounding.
    """
    amplitudes = np.asarray(amplitudes, dtype=complex)
    if amplitudes.shape != (4,):
        raise ValueError("expected a 4-component two-qubit state")
    return BELL_MATRIX.T @ amplitudes


def bell_compose(coefficients: np.ndarray) -> np.ndarray:
    """Inverse of bell_expand."""
    coefficients = np.asarray(coefficients, dtype=complex)
    return BELL_MATRIX @ coefficients


def pauli_on_bell(ops, coefficients: np.ndarray) -> np.ndarray:
    """Apply single-qubit Paulis (applied first-to-last) in the Bell basis.

    ops is a sequence of names from {"X1", "X2", "Z1", "Z2"}; the result is
    the signed permutation of the Bell coefficients, e.g. Z1 maps phi- to
    phi+ and X1 maps phi- to -psi-.
    """
    amps = bell_compose(coefficients)
    for op in ops:
        amps = PAULI_OPS[op] @ amps
    return bell_expand(amps)


def pauli_on_data(ops, amplitudes: np.ndarray) -> np.ndarray:
    """Same operator product, acting on computational-basis amplitudes."""
    amplitudes = np.asarray(amplitudes, dtype=complex)
    for op in ops:
        amplitudes = PAULI_OPS[op] @ amplitudes
    return amplitudes


def ideal_circuit(coefficients: np.ndarray) -> np.ndarray:
    """Closed-form output of the ideal circuit, before ancilla measurement.

    Input: Bell coefficients (A+, B+, A-, B-) of the data qubits; ancillas
    start in |00⟩.  Output: 16-component state over (ancilla A, data 1,
    data 2, ancilla B) with the syndrome structure

        A+|0⟩|Φ⁺⟩|0⟩ + B+|0⟩|Ψ⁺⟩|1⟩ + A-|1⟩|Φ⁻⟩|0⟩ + B-|1⟩|Ψ⁻⟩|1⟩.
    """
    ap, bp, am, bm = np.asarray(coefficients, dtype=complex)
    out = np.zeros(16, dtype=complex)
    for coeff, anc_a, label, anc_b in (
        (ap, 0, "phi+", 0),
        (bp, 0, "psi+", 1),
        (am, 1, "phi-", 0),
        (bm, 1, "psi-", 1),
    ):
        data = bell_state(label)
        for d in range(4):
            out[anc_a * 8 + d * 2 + anc_b] += coeff * data[d]
    return out


def circuit_by_gates(coefficients: np.ndarray) -> np.ndarray:
    """Gate-by-gate reference path: H(A), CNOT(A→1), CNOT(A→2),
    CNOT(1→B), CNOT(2→B), H(A).  Must equal ideal_circuit exactly."""
    data = bell_compose(np.asarray(coefficients, dtype=complex))
    state = np.zeros(16, dtype=complex)
    for d in range(4):
        state[d * 2] = data[d]  # ancillas |0⟩, ordering (A, d1, d2, B)

    def apply_1q(u, qubit):
        psi = state.reshape([2] * 4)
        psi = np.moveaxis(np.tensordot(u, psi, axes=([1], [qubit])), 0, qubit)
        return psi.reshape(16)

    def apply_cnot(control, target):
        psi = state.reshape([2] * 4).copy()
        src = [slice(None)] * 4
        src[control] = 1
        flipped = np.flip(psi[tuple(src)], axis=_axis_after(control, target))
        psi[tuple(src)] = flipped
        return psi.reshape(16)

    def _axis_after(control, target):
        return target - 1 if target > control else target

    state = apply_1q(_H, 0)
    state = apply_cnot(0, 1)
    state = apply_cnot(0, 2)
    state = apply_cnot(1, 3)
    state = apply_cnot(2, 3)
    state = apply_1q(_H, 0)
    return state


#: (target Bell label, syndrome) → correction ops, applied first-to-last
_CORRECTIONS = {
    ("phi+", (1, 1)): (),
    ("phi+", (-1, 1)): ("Z1",),
    ("phi+", (1, -1)): ("X2",),
    ("phi+", (-1, -1)): ("Z1", "X2"),
    ("psi+", (1, -1)): (),
    ("psi+", (1, 1)): ("X1",),
    ("psi+", (-1, 1)): ("Z1", "X2"),
    ("psi+", (-1, -1)): ("Z1",),
}


def correction_for(target: str, syndrome: tuple) -> tuple:
    """Pauli correction mapping the syndrome-implied Bell state to target.

    Only the two analyzed targets (phi+, psi+) are supported; corrections
    are not unique, this returns one fixed choice per pair.
    """
    try:
        return _CORRECTIONS[(target, syndrome)]
    except KeyError:
        raise ValueError(f"unsupported (target, syndrome): {(target, syndrome)}")


def recover_product_state() -> np.ndarray:
    """Two-qubit unitary CNOT(1→2)·(H⊗I) mapping |00⟩ to |Φ⁺⟩ exactly."""
    h1 = np.kron(_H, _I2)
    cnot = np.array(
        [
            [1, 0, 0, 0],
            [0, 1, 0, 0],
            [0, 0, 0, 1],
            [0, 0, 1, 0],
        ],
        dtype=float,
    )
    return cnot @ h1
