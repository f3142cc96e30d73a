"""
Dense real-symmetric eigensolving (cyclic Jacobi) and small complex helpers.

The Jacobi method is used deliberately for the subspace Hamiltonian blocks:
it is simple, numerically robust for the dense symmetric matrices appearing
here (n ≤ 32) and, with the fixed row-major sweep order, fully deterministic
including eigenvector signs.  The full-space validation path uses an
unrelated eigensolver (LAPACK via numpy) so the two routes stay independent.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


class JacobiConvergenceError(RuntimeError):
    """Raised when the sweep budget is exhausted; carries the residual."""

    def __init__(self, sweeps: int, residual: float):
        super().__init__(
            f"Jacobi did not converge after {sweeps} sweeps "
            f"(max off-diagonal residual {residual:.3e})"
        )
        self.sweeps = sweeps
        self.residual = residual


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues (ascending) and orthonormal eigenvectors (as columns)."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def dim(self) -> int:
        return self.eigenvalues.shape[0]


def _rotate(a: np.ndarray, v: np.ndarray, p: int, q: int) -> None:
    """One Givens rotation zeroing a[p, q], applied in place to a and v."""
    apq = a[p, q]
    theta = (a[q, q] - a[p, p]) / (2.0 * apq)
    t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
    c = 1.0 / math.sqrt(t * t + 1.0)
    s = t * c

    col_p = a[:, p].copy()
    col_q = a[:, q].copy()
    a[:, p] = c * col_p - s * col_q
    a[:, q] = s * col_p + c * col_q
    row_p = a[p, :].copy()
    row_q = a[q, :].copy()
    a[p, :] = c * row_p - s * row_q
    a[q, :] = s * row_p + c * row_q
    a[p, q] = 0.0
    a[q, p] = 0.0

    col_p = v[:, p].copy()
    col_q = v[:, q].copy()
    v[:, p] = c * col_p - s * col_q
    v[:, q] = s * col_p + c * col_q


def _max_offdiag(a: np.ndarray) -> float:
    n = a.shape[0]
    if n < 2:
        return 0.0
    mask = ~np.eye(n, dtype=bool)
    return float(np.max(np.abs(a[mask])))


def jacobi_eigendecompose(
    a: np.ndarray, tol: float = 1e-14, max_sweeps: int = 100
) -> SpectralDecomposition:
    """Diagonalize a real symmetric matrix by cyclic Jacobi rotations.

    Sweeps run row-major over the upper triangle until every off-diagonal
    element is at most tol·max|A|.  Eigenvalues are returned ascending; each
    eigenvector is sign-fixed so its first non-negligible component is
    positive.
    """
    a = np.array(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix must be exactly symmetric")
    if not tol > 0:
        raise ValueError("tol must be positive")

    n = a.shape[0]
    v = np.eye(n)
    scale = max(float(np.max(np.abs(a))), 1e-300)
    threshold = tol * scale

    converged = False
    for _ in range(max_sweeps):
        if _max_offdiag(a) <= threshold:
            converged = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) > threshold * 1e-2:
                    _rotate(a, v, p, q)
    else:
        if _max_offdiag(a) <= threshold:
            converged = True
    if not converged:
        raise JacobiConvergenceError(max_sweeps, _max_offdiag(a))

    eigvals = np.diag(a).copy()
    order = np.argsort(eigvals, kind="stable")
    eigvals = eigvals[order]
    v = v[:, order]
    for k in range(n):
        col = v[:, k]
        nz = np.nonzero(np.abs(col) > 1e-12)[0]
        if nz.size and col[nz[0]] < 0:
            v[:, k] = -col
    return SpectralDecomposition(eigenvalues=eigvals, eigenvectors=v)


def hermitian_check(m: np.ndarray, tol: float = 1e-12) -> bool:
    """True iff ‖M − M†‖_max ≤ tol."""
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    return float(np.max(np.abs(m - m.conj().T))) <= tol
