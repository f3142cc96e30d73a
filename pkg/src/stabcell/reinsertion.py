"""
Re-insertion of a post-measurement state into the ideal circuit.

The post-measurement state (with ancillas re-initialized to |00⟩) is fed
through the ideal circuit, which acts on the data qubits only and leaves the
photon modes untouched.  The resulting ancilla measurement probabilities p̃
are computed by expanding every surviving data-qubit factor over the Bell
states and summing coherently within each resonator occupation (states with
identical resonator labels interfere; distinct occupations are orthogonal).

For every syndrome s the identity p̃(s) = F²(Bell(s), ρ_q) holds, with ρ_q
the resonator-traced data-qubit density matrix of the same input; this is
checked, not assumed.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import density, stabilizer
from .syndrome import SYNDROMES, ProjectedState, index_data_bits, index_resonators

#: Bell expansion coefficients of the computational data states, keyed by
#: (q1, q2); columns ordered (phi+, psi+, phi-, psi-)
_BELL_COEFS = {
    (q1, q2): stabilizer.bell_expand(
        np.eye(4)[2 * q1 + q2].astype(complex)
    )
    for q1 in (0, 1)
    for q2 in (0, 1)
}

#: re-insertion outcome s → position of the matching Bell coefficient
_BELL_SLOT = {(1, 1): 0, (1, -1): 1, (-1, 1): 2, (-1, -1): 3}


@dataclass(frozen=True)
class ReinsertionReport:
    t: float
    ptilde: dict  # syndrome → p̃
    fidelity_sq: dict  # syndrome → F²(Bell(s), ρ_q)
    max_residual: float


def reinsert(post: ProjectedState) -> dict:
    """Ancilla measurement probabilities p̃ after one more ideal circuit."""
    if post.amplitudes is None:
        raise ValueError(f"dead branch {post.syndrome} cannot be re-inserted")
    nu = post.amplitudes
    groups = {}
    for k in np.nonzero(np.abs(nu) > 0)[0]:
        groups.setdefault(index_resonators(k), []).append(k)
    ptilde = {}
    for s in SYNDROMES:
        slot = _BELL_SLOT[s]
        total = 0.0
        for members in groups.values():
            amp = sum(
                _BELL_COEFS[index_data_bits(k)][slot] * nu[k] for k in members
            )
            total += abs(amp) ** 2
        ptilde[s] = total
    return ptilde


def verify_identity(post: ProjectedState, t: float = float("nan")) -> ReinsertionReport:
    """Compute p̃ and F² for all four targets and their maximum deviation."""
    ptilde = reinsert(post)
    rho = density.reduce_to_qubits(post)
    fsq = {
        s: density.fidelity(
            stabilizer.bell_state(stabilizer.SYNDROME_BELL[s]), rho
        )
        ** 2
        for s in SYNDROMES
    }
    residual = max(abs(ptilde[s] - fsq[s]) for s in SYNDROMES)
    return ReinsertionReport(
        t=t, ptilde=ptilde, fidelity_sq=fsq, max_residual=residual
    )
