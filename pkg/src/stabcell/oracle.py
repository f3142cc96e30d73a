"""
Independent full-space validation path.

The full Hamiltonian is assembled on the complete tensor-product space of
four resonators (photon cutoff 2, so 3 levels each) and four qubits,
dimension 3⁴·2⁴ = 1296, directly from ladder and Pauli factors with
rotating-wave couplings a†σ₊ + aσ₋ on every resonator-qubit edge.  Nothing
is shared with the subspace route: no frozen basis ordering, no transcribed
matrix elements, and eigensolving goes through LAPACK (numpy.linalg.eigh)
instead of the package's own Jacobi.

The cutoff is exact, not approximate, for every scenario here: the coupling
conserves the total excitation number, so N ≤ 2 states never reach a
three-photon occupation.  The conservation itself is a tested invariant.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .model import (
    GROUND_LABEL,
    LEVEL1_LABELS,
    LEVEL2_LABELS,
    BasisLabel,
    SystemParams,
    ground_energy,
)

DIM = 3**4 * 2**4  # 1296

_A = np.diag(np.sqrt([1.0, 2.0]), k=1)  # annihilation, cutoff 2
_N3 = np.diag([0.0, 1.0, 2.0])
_S = np.array([[0.0, 1.0], [0.0, 0.0]])  # qubit de-excitation |0⟩⟨1|
_NQ = np.diag([0.0, 1.0])
_SZ = np.diag([1.0, -1.0])  # ground |0⟩ has σ_z = +1
_SX = np.array([[0.0, 1.0], [1.0, 0.0]])

#: factor order: r1 r2 r3 r4 q1 q2 qa qb
_FACTOR_DIMS = (3, 3, 3, 3, 2, 2, 2, 2)


def _embed(ops: dict) -> np.ndarray:
    """Kronecker product with identities everywhere except the given slots."""
    out = np.array([[1.0]])
    for slot, dim in enumerate(_FACTOR_DIMS):
        out = np.kron(out, ops.get(slot, np.eye(dim)))
    return out


def label_index(label: BasisLabel) -> int:
    """Position of a product basis state in the full-space ordering."""
    idx = 0
    for value, dim in zip(label, _FACTOR_DIMS):
        idx = idx * dim + value
    return idx


#: resonator-qubit edges: (resonator slot, qubit slot, coupling attribute)
_EDGES = (
    (0, 4, "g11"), (0, 6, "g1a"),
    (1, 6, "g2a"), (1, 5, "g22"),
    (3, 5, "g42"), (3, 7, "g4b"),
    (2, 7, "g3b"), (2, 4, "g31"),
)


@dataclass
class FullSpaceOperator:
    """Dense full-space Hamiltonian plus its lazily cached eigensystem."""

    h: np.ndarray
    params: SystemParams
    _eigensystem: tuple = field(default=None, repr=False)

    def eigensystem(self) -> tuple:
        if self._eigensystem is None:
            vals, vecs = np.linalg.eigh(self.h)
            self._eigensystem = (vals, vecs)
        return self._eigensystem


def build_full_h(p: SystemParams) -> FullSpaceOperator:
    """Assemble the full rotating-wave Hamiltonian from tensor factors."""
    resonator_w = (p.w1, p.w2, p.w3, p.w4)
    qubit_w = (p.wp1, p.wp2, p.wa, p.wb)
    h = np.zeros((DIM, DIM))
    for slot, w in enumerate(resonator_w):
        h += w * _embed({slot: _N3 + 0.5 * np.eye(3)})
    for i, w in enumerate(qubit_w):
        h += -0.5 * w * _embed({4 + i: _SZ})
    for r_slot, q_slot, g_name in _EDGES:
        g = getattr(p, g_name)
        if g == 0.0:
            continue
        hop = _embed({r_slot: _A.T, q_slot: _S})
        h += g * (hop + hop.T)
    return FullSpaceOperator(h=h, params=p)


def excitation_number_operator() -> np.ndarray:
    n = np.zeros((DIM, DIM))
    for slot in range(4):
        n += _embed({slot: _N3})
    for slot in range(4, 8):
        n += _embed({slot: _NQ})
    return n


def commutator_norm(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.max(np.abs(a @ b - b @ a)))


def block(op: FullSpaceOperator, labels) -> np.ndarray:
    """Restriction of H to the given labels, in their order."""
    idx = [label_index(lab) for lab in labels]
    return op.h[np.ix_(idx, idx)]


def full_propagate(op: FullSpaceOperator, state: np.ndarray, t: float) -> np.ndarray:
    """e^{-iHt}|state⟩ via the dense eigendecomposition."""
    state = np.asarray(state, dtype=complex)
    if state.shape != (DIM,):
        raise ValueError(f"expected a {DIM}-component state")
    vals, vecs = op.eigensystem()
    return vecs @ (np.exp(-1j * vals * t) * (vecs.conj().T @ state))


def embed_amplitudes(mu: np.ndarray) -> np.ndarray:
    """Lift indexed amplitudes (ground + level-2, length 33) to full space."""
    state = np.zeros(DIM, dtype=complex)
    state[label_index(GROUND_LABEL)] = mu[0]
    for k, lab in enumerate(LEVEL2_LABELS, start=1):
        state[label_index(lab)] = mu[k]
    return state


def extract_amplitudes(state: np.ndarray) -> np.ndarray:
    """Project a full-space state back to the indexed 33-vector."""
    mu = np.zeros(33, dtype=complex)
    mu[0] = state[label_index(GROUND_LABEL)]
    for k, lab in enumerate(LEVEL2_LABELS, start=1):
        mu[k] = state[label_index(lab)]
    return mu


def project_ancillas(state: np.ndarray, syndrome: tuple) -> tuple:
    """Born probability and renormalized projection for an ancilla outcome."""
    bits = (int(syndrome[0] == -1), int(syndrome[1] == -1))
    psi = state.reshape(_FACTOR_DIMS)
    sel = [slice(None)] * 8
    sel[6], sel[7] = bits[0], bits[1]
    kept = psi[tuple(sel)]
    prob = float(np.sum(np.abs(kept) ** 2))
    projected = np.zeros_like(psi)
    projected[tuple(sel)] = kept
    if prob > 0:
        projected = projected / np.sqrt(prob)
    return prob, projected.reshape(DIM)


def reduced_data_rho(state: np.ndarray) -> np.ndarray:
    """Trace out resonators and ancillas, leaving the 4×4 data-qubit state."""
    psi = np.asarray(state, dtype=complex).reshape(81, 2, 2, 2, 2)
    psi = np.moveaxis(psi, (1, 2), (3, 4)).reshape(81 * 4, 4)
    return psi.T @ psi.conj()


def stabilizer_commutators(p: SystemParams) -> tuple:
    """Max-norms of [X_a X₁ X₂, H] and [Z₁ Z₂ Z_b, H] on the full space."""
    x_stab = _embed({4: _SX, 5: _SX, 6: _SX})
    z_stab = _embed({4: _SZ, 5: _SZ, 7: _SZ})
    h = build_full_h(p).h
    return commutator_norm(x_stab, h), commutator_norm(z_stab, h)


def scenario_initial_state(scenario) -> np.ndarray:
    """Full-space initial state of a scenario (empty resonators, Bell pair,
    matching ancillas)."""
    from .syndrome import Scenario

    state = np.zeros(DIM, dtype=complex)
    s = 1.0 / np.sqrt(2.0)
    if scenario is Scenario.PHI_PLUS:
        state[label_index(BasisLabel(0, 0, 0, 0, 0, 0, 0, 0))] = s
        state[label_index(BasisLabel(0, 0, 0, 0, 1, 1, 0, 0))] = s
    else:
        state[label_index(BasisLabel(0, 0, 0, 0, 0, 1, 0, 1))] = s
        state[label_index(BasisLabel(0, 0, 0, 0, 1, 0, 0, 1))] = s
    return state


def level1_full_labels() -> tuple:
    return LEVEL1_LABELS


def level2_full_labels() -> tuple:
    return LEVEL2_LABELS
