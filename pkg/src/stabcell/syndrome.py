"""
Ancilla measurement projectors on evolved states, syndrome probabilities
and post-measurement states.

A syndrome (m_a, m_b) selects the second-level basis states whose ancilla
bits match (+1 ↔ 0, −1 ↔ 1); the no-error syndrome (1, 1) additionally
keeps the ground-state amplitude.  Probabilities are Born sums over the
selected amplitudes; the four probabilities are complete at every time.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import evolution
from .linalg import SpectralDecomposition
from .model import LEVEL2_LABELS, ExcitationBasis

SYNDROMES = ((1, 1), (-1, 1), (1, -1), (-1, -1))

#: probabilities below this are treated as a dead branch (no post-state)
PROBABILITY_FLOOR = 1e-300

# Literal index sets (1-based f indices) used to cross-check the derivation;
# a mismatch means the frozen basis ordering has been corrupted.
_EXPECTED_SETS = {
    (1, 1): frozenset(list(range(1, 13)) + [15, 16, 19, 20, 23, 24, 27]),
    (-1, 1): frozenset({13, 17, 21, 25, 28, 30}),
    (1, -1): frozenset({14, 18, 22, 26, 29, 31}),
    (-1, -1): frozenset({32}),
}


class BasisOrderError(RuntimeError):
    """Derived syndrome index sets disagree with the frozen expectation."""


@dataclass(frozen=True)
class SyndromeIndexSets:
    by_syndrome: dict  # syndrome → frozenset of 1-based f indices
    no_error_full: frozenset  # {0} ∪ S(1,1)
    data_excited: frozenset  # one photon + one excited data qubit

    def indices(self, syndrome: tuple) -> frozenset:
        return self.by_syndrome[syndrome]


def derive_index_sets(basis: ExcitationBasis) -> SyndromeIndexSets:
    """Compute the syndrome index sets from each label's ancilla bits."""
    if basis.level != 2 or len(basis.labels) != 32:
        raise ValueError("syndrome index sets are defined on the level-2 basis")
    by_syndrome = {s: set() for s in SYNDROMES}
    data_excited = set()
    for k, label in enumerate(basis.labels, start=1):
        syndrome = (1 - 2 * label.qa, 1 - 2 * label.qb)
        by_syndrome[syndrome].add(k)
        if syndrome == (1, 1) and label.q1 + label.q2 == 1:
            data_excited.add(k)
    by_syndrome = {s: frozenset(v) for s, v in by_syndrome.items()}
    if by_syndrome != _EXPECTED_SETS:
        raise BasisOrderError(
            "derived syndrome index sets do not match the frozen basis order"
        )
    return SyndromeIndexSets(
        by_syndrome=by_syndrome,
        no_error_full=frozenset({0}) | by_syndrome[(1, 1)],
        data_excited=frozenset(data_excited),
    )


class Scenario(Enum):
    """Stable initial states: a Bell state with matching ancillas and
    empty resonators."""

    PHI_PLUS = "phi+"
    PSI_PLUS = "psi+"

    @property
    def target_bell(self) -> str:
        return self.value

    @property
    def no_error_syndrome(self) -> tuple:
        return (1, 1) if self is Scenario.PHI_PLUS else (1, -1)

    def initial_amplitudes(self) -> np.ndarray:
        mu = np.zeros(33, dtype=complex)
        if self is Scenario.PHI_PLUS:
            mu[0] = evolution.SQRT1_2
            mu[27] = evolution.SQRT1_2
        else:
            mu[29] = evolution.SQRT1_2
            mu[31] = evolution.SQRT1_2
        return mu

    def evolve(
        self, decomp2: SpectralDecomposition, e0: float, t: float
    ) -> np.ndarray:
        if self is Scenario.PHI_PLUS:
            return evolution.beta(decomp2, e0, t)
        return evolution.gamma(decomp2, t)


@dataclass(frozen=True)
class ProjectedState:
    """Renormalized restriction of μ to one syndrome's index set.

    The ancilla factor is stripped: downstream consumers infer the ancilla
    bits from the syndrome and use only resonator and data-qubit bits of
    the surviving labels.
    """

    syndrome: tuple
    probability: float
    amplitudes: np.ndarray  # (33,), zero outside the syndrome's index set


def measure(
    mu: np.ndarray, syndrome: tuple, sets: SyndromeIndexSets
) -> ProjectedState:
    """Project μ onto a syndrome outcome and renormalize."""
    mu = np.asarray(mu, dtype=complex)
    if mu.shape != (33,):
        raise ValueError("expected 33 amplitudes (ground + level-2 basis)")
    keep = sets.indices(syndrome)
    mask = np.zeros(33, dtype=bool)
    mask[list(keep)] = True
    if syndrome == (1, 1):
        mask[0] = True
    selected = np.where(mask, mu, 0.0)
    probability = float(np.sum(np.abs(selected) ** 2))
    if probability < PROBABILITY_FLOOR:
        return ProjectedState(syndrome, probability, None)
    return ProjectedState(
        syndrome, probability, selected / np.sqrt(probability)
    )


def probabilities(mu: np.ndarray, sets: SyndromeIndexSets) -> dict:
    """Born probabilities of the four syndromes; they sum to ‖μ‖²."""
    mu = np.asarray(mu, dtype=complex)
    out = {}
    for s in SYNDROMES:
        idx = list(sets.indices(s))
        p = float(np.sum(np.abs(mu[idx]) ** 2))
        if s == (1, 1):
            p += abs(mu[0]) ** 2
        out[s] = p
    return out


def sweep(
    scenario: Scenario,
    decomp2: SpectralDecomposition,
    e0: float,
    times: np.ndarray,
    sets: SyndromeIndexSets,
) -> np.ndarray:
    """Syndrome probabilities over a time grid; rows ordered as SYNDROMES."""
    times = np.asarray(times, dtype=float)
    table = np.empty((times.size, len(SYNDROMES)))
    for i, t in enumerate(times):
        probs = probabilities(scenario.evolve(decomp2, e0, t), sets)
        table[i] = [probs[s] for s in SYNDROMES]
    return table


# Map index k (0..32) to its resonator occupation and data-qubit bits.
def index_resonators(k: int) -> tuple:
    return (0, 0, 0, 0) if k == 0 else LEVEL2_LABELS[k - 1].resonators


def index_data_bits(k: int) -> tuple:
    return (0, 0) if k == 0 else LEVEL2_LABELS[k - 1].data_bits
