"""
Reduced two-qubit density matrices, fidelities and the operator-sum map.

After the ancilla measurement the data qubits and resonators are in general
still entangled, so the data-qubit state is obtained by a partial trace over
the resonator occupations.  Because distinct basis labels with identical
resonator occupation interfere, the trace is organized by grouping the
surviving amplitudes per resonator label; each group contributes a rank-one
term, which makes the result Hermitian and PSD by construction.

Fidelity follows the square-root convention F(|ψ⟩, ρ) = √⟨ψ|ρ|ψ⟩; the
squared value is what re-insertion probabilities reproduce.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import stabilizer
from .linalg import SpectralDecomposition
from .model import GROUND_LABEL, LEVEL1_LABELS, LEVEL2_LABELS, BasisLabel
from .syndrome import ProjectedState, Scenario, index_data_bits, index_resonators


def _data_index(bits: tuple) -> int:
    return 2 * bits[0] + bits[1]


def reduce_to_qubits(post: ProjectedState) -> np.ndarray:
    """Partial trace over the resonators of a post-measurement state."""
    if post.amplitudes is None:
        raise ValueError(
            f"syndrome {post.syndrome} branch has no post-state "
            f"(probability {post.probability:.3e})"
        )
    nu = post.amplitudes
    norm = float(np.sum(np.abs(nu) ** 2))
    if abs(norm - 1.0) > 1e-9:
        raise ValueError(f"post-state not normalized (‖ν‖² = {norm})")
    groups = {}
    for k in np.nonzero(np.abs(nu) > 0)[0]:
        groups.setdefault(index_resonators(k), []).append(k)
    rho = np.zeros((4, 4), dtype=complex)
    for members in groups.values():
        vec = np.zeros(4, dtype=complex)
        for k in members:
            vec[_data_index(index_data_bits(k))] += nu[k]
        rho += np.outer(vec, vec.conj())
    return rho


def fidelity(target: np.ndarray, rho: np.ndarray) -> float:
    """F = √⟨ψ|ρ|ψ⟩ for a pure target, clamped at zero round-off."""
    target = np.asarray(target, dtype=complex)
    if abs(np.vdot(target, target) - 1.0) > 1e-9:
        raise ValueError("target state must be normalized")
    val = float(np.real(np.vdot(target, rho @ target)))
    return np.sqrt(max(val, 0.0))


def corrected_fidelity(
    scenario: Scenario, syndrome: tuple, rho: np.ndarray
) -> float:
    """Fidelity of the error-corrected target against ρ.

    The correction C maps the syndrome-implied Bell state to the scenario
    target, and F(target, CρC†) = F(C†·target, ρ); the Pauli products here
    are self-inverse up to reversal, so the adjoint is applied by running
    the listed operations in reverse order on the target.
    """
    ops = stabilizer.correction_for(scenario.target_bell, syndrome)
    vec = stabilizer.bell_state(scenario.target_bell)
    vec = stabilizer.pauli_on_data(tuple(reversed(ops)), vec)
    return fidelity(vec, rho)


# ---------------------------------------------------------------------------
# Operator-sum (Kraus) representation of the measured channel.

_ANCILLA_FOR_SYNDROME = {
    (1, 1): (0, 0),
    (-1, 1): (1, 0),
    (1, -1): (0, 1),
    (-1, -1): (1, 1),
}

_LEVEL_INDEX = {GROUND_LABEL: (0, 0)}
_LEVEL_INDEX.update({lab: (1, i) for i, lab in enumerate(LEVEL1_LABELS)})
_LEVEL_INDEX.update({lab: (2, i) for i, lab in enumerate(LEVEL2_LABELS)})

_DATA_BITS = ((0, 0), (0, 1), (1, 0), (1, 1))


@dataclass(frozen=True)
class KrausSet:
    """Operational elements A_r (4×4, one per resonator occupation) for a
    fixed syndrome outcome and initial ancilla configuration.

    Columns whose initial product state would leave the tracked N ≤ 2
    subspace are zero; the map is therefore only valid on data-qubit inputs
    supported inside it (both analyzed Bell inputs are).
    """

    syndrome: tuple
    elements: dict  # resonator tuple → (4, 4) complex array

    def apply(self, rho: np.ndarray) -> tuple:
        """Return (Σ_r A ρ A†, its trace).  The trace is the probability of
        the syndrome outcome for this input state."""
        total = np.zeros((4, 4), dtype=complex)
        for a in self.elements.values():
            total += a @ rho @ a.conj().T
        return total, float(np.real(np.trace(total)))

    def apply_normalized(self, rho: np.ndarray) -> np.ndarray:
        total, trace = self.apply(rho)
        if trace < 1e-300:
            raise ValueError(f"zero-probability branch {self.syndrome}")
        return total / trace


def _evolved_product_state(
    decomps: dict, e0: float, label: BasisLabel, t: float
):
    """Evolve a product basis state; yields (label, amplitude) pairs."""
    from .evolution import propagate

    level, idx = _LEVEL_INDEX.get(label, (None, None))
    if level is None:
        return  # outside the tracked N ≤ 2 subspace
    if level == 0:
        yield GROUND_LABEL, np.exp(-1j * e0 * t)
        return
    labels = LEVEL1_LABELS if level == 1 else LEVEL2_LABELS
    start = np.zeros(len(labels), dtype=complex)
    start[idx] = 1.0
    out = propagate(level, decomps[level], start, t)
    for lab, amp in zip(labels, out):
        yield lab, amp


def kraus_elements(
    decomps: dict,
    e0: float,
    scenario: Scenario,
    syndrome: tuple,
    t: float,
) -> KrausSet:
    """A_r[q', q] = ⟨r q' a_k| U(t) |0000 q a_m⟩ for the scenario's initial
    ancilla state a_m and the measured ancilla state a_k."""
    a_m = _ANCILLA_FOR_SYNDROME[scenario.no_error_syndrome]
    a_k = _ANCILLA_FOR_SYNDROME[syndrome]
    elements = {}
    for q_in in _DATA_BITS:
        start = BasisLabel(0, 0, 0, 0, *q_in, *a_m)
        col = _data_index(q_in)
        for lab, amp in _evolved_product_state(decomps, e0, start, t):
            if lab.ancilla_bits != a_k or amp == 0.0:
                continue
            a = elements.setdefault(
                lab.resonators, np.zeros((4, 4), dtype=complex)
            )
            a[_data_index(lab.data_bits), col] += amp
    return KrausSet(syndrome=syndrome, elements=elements)
