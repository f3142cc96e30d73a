"""
Spectral propagators for the excitation subspaces and the amplitude
functions of the two analyzed scenarios.

Propagation is a spectral sum, exact to eigensolver precision:

    out_k = Σ_η e^{-iE_η t} V_{kη} (Σ_j V_{jη} in_j)

Scenario amplitudes are carried as a single vector μ indexed 0..32, where
index 0 is the ground state |E₀⟩ and 1..32 the second-level basis states.
For the |Φ⁺⟩ scenario μ_k(t) = β_k(t) with

    β₀(t) = (√2/2) e^{-iE₀t},
    β_k(t) = (√2/2) Σ_η e^{-iE_η t} b_η27 b_ηk,

and for the |Ψ⁺⟩ scenario μ₀ = 0 and μ_k(t) = γ_k(t) with initial support on
indices 29 and 31.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import SpectralDecomposition

SQRT1_2 = 1.0 / np.sqrt(2.0)

_LEVEL_DIMS = {1: 8, 2: 32}


@dataclass(frozen=True)
class SystemState:
    """Normalized amplitudes over {|E₀⟩} ∪ level-1 ∪ level-2 bases."""

    c0: complex
    e: np.ndarray  # (8,) first-level amplitudes
    f: np.ndarray  # (32,) second-level amplitudes

    def norm(self) -> float:
        return float(
            np.sqrt(
                abs(self.c0) ** 2
                + np.sum(np.abs(self.e) ** 2)
                + np.sum(np.abs(self.f) ** 2)
            )
        )


def propagate(
    level: int, decomp: SpectralDecomposition, coeffs: np.ndarray, t: float
) -> np.ndarray:
    """Evolve subspace coefficients by e^{-iHt} using the spectral sum."""
    dim = _LEVEL_DIMS.get(level)
    if dim is None:
        raise ValueError(f"level must be 1 or 2, got {level}")
    coeffs = np.asarray(coeffs, dtype=complex)
    if coeffs.shape != (dim,) or decomp.dim != dim:
        raise ValueError(
            f"dimension mismatch: level {level} expects {dim}, "
            f"got coeffs {coeffs.shape} and decomposition dim {decomp.dim}"
        )
    v = decomp.eigenvectors
    phases = np.exp(-1j * decomp.eigenvalues * t)
    return v @ (phases * (v.T @ coeffs))


def beta(decomp2: SpectralDecomposition, e0: float, t: float) -> np.ndarray:
    """Amplitudes μ (length 33) of the evolved |Φ⁺⟩ scenario state."""
    mu = np.zeros(33, dtype=complex)
    mu[0] = SQRT1_2 * np.exp(-1j * e0 * t)
    start = np.zeros(32, dtype=complex)
    start[26] = SQRT1_2  # |f27⟩
    mu[1:] = propagate(2, decomp2, start, t)
    return mu


def gamma(decomp2: SpectralDecomposition, t: float) -> np.ndarray:
    """Amplitudes μ (length 33) of the evolved |Ψ⁺⟩ scenario state."""
    mu = np.zeros(33, dtype=complex)
    start = np.zeros(32, dtype=complex)
    start[28] = SQRT1_2  # |f29⟩
    start[30] = SQRT1_2  # |f31⟩
    mu[1:] = propagate(2, decomp2, start, t)
    return mu
