"""Jacobi eigensolver: analytic cases, invariants, LAPACK cross-checks."""
import numpy as np
import pytest

from stabcell.linalg import (
    JacobiConvergenceError,
    hermitian_check,
    jacobi_eigendecompose,
)


def test_identity_matrix():
    d = jacobi_eigendecompose(np.eye(8))
    assert np.allclose(d.eigenvalues, np.ones(8))
    # V is a signed permutation of I; with the sign convention it is I itself
    assert np.allclose(d.eigenvectors, np.eye(8))


def test_two_by_two_analytic():
    d = jacobi_eigendecompose(np.array([[0.0, 1.0], [1.0, 0.0]]))
    assert np.allclose(d.eigenvalues, [-1.0, 1.0])
    s = np.sqrt(0.5)
    assert np.allclose(np.abs(d.eigenvectors), s)
    # sign convention: first nonzero component of each column positive
    assert (d.eigenvectors[0] > 0).all()


def test_diagonal_matrix_sorted():
    d = jacobi_eigendecompose(np.diag([3.0, -1.0, 2.0]))
    assert np.allclose(d.eigenvalues, [-1.0, 2.0, 3.0])


@pytest.mark.parametrize("n", [2, 5, 8, 16, 32])
def test_reconstruction_and_orthonormality(n):
    rng = np.random.default_rng(100 + n)
    a = rng.normal(size=(n, n))
    a = 0.5 * (a + a.T)
    d = jacobi_eigendecompose(a)
    v, e = d.eigenvectors, d.eigenvalues
    assert np.max(np.abs(v.T @ v - np.eye(n))) < 1e-12
    assert np.max(np.abs(v @ np.diag(e) @ v.T - a)) < 1e-10
    assert (np.diff(e) >= 0).all()


def test_matches_lapack_eigenvalues():
    rng = np.random.default_rng(7)
    a = rng.normal(size=(32, 32))
    a = 0.5 * (a + a.T)
    d = jacobi_eigendecompose(a)
    ref = np.linalg.eigvalsh(a)
    assert np.max(np.abs(d.eigenvalues - ref)) < 1e-10


def test_eigenvalues_invariant_under_orthogonal_similarity():
    rng = np.random.default_rng(11)
    a = rng.normal(size=(12, 12))
    a = 0.5 * (a + a.T)
    q, _ = np.linalg.qr(rng.normal(size=(12, 12)))
    b = q @ a @ q.T
    b = 0.5 * (b + b.T)  # re-symmetrize float round-off
    d1 = jacobi_eigendecompose(a)
    d2 = jacobi_eigendecompose(b)
    assert np.max(np.abs(d1.eigenvalues - d2.eigenvalues)) < 1e-10


def test_degenerate_eigenvalues_allowed():
    a = np.diag([1.0, 1.0, 2.0])
    a[0, 2] = a[2, 0] = 0.5
    d = jacobi_eigendecompose(a)
    v = d.eigenvectors
    assert np.max(np.abs(v.T @ v - np.eye(3))) < 1e-12


def test_rejects_nonsymmetric():
    with pytest.raises(ValueError):
        jacobi_eigendecompose(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_hermitian_check():
    assert hermitian_check(np.eye(3))
    m = np.eye(3, dtype=complex)
    m[0, 1] = 1j
    assert not hermitian_check(m)


def test_convergence_error_is_raised_on_zero_sweep_budget():
    a = np.array([[0.0, 1.0], [1.0, 0.0]])
    with pytest.raises(JacobiConvergenceError):
        jacobi_eigendecompose(a, max_sweeps=0)
