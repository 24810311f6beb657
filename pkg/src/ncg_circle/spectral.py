"""Dense Hermitian eigenvalues, a direct circulant oracle, and matrix norms.

Matrices are plain complex ``numpy`` arrays; spectra are sorted float arrays.
"""
from __future__ import annotations

import numpy as np

HERMITIAN_TOL = 1e-12


class NotHermitianError(ValueError):
    def __init__(self, asymmetry: float, tol: float):
        super().__init__(f"matrix is not Hermitian: max |m - m^H| = {asymmetry:.3e} > {tol:.1e}")
        self.asymmetry = asymmetry


def as_matrix(m) -> np.ndarray:
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise ValueError(f"expected a non-empty square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    return a


def max_abs_norm(m) -> float:
    a = np.asarray(m)
    if a.size == 0:
        return 0.0
    return float(np.max(np.abs(a)))


def hermitian_asymmetry(m) -> float:
    a = np.asarray(m)
    return max_abs_norm(a - a.conj().T)


def _check_hermitian(a: np.ndarray) -> None:
    # tolerance scales with the entries so that products like A^H A at large N pass
    tol = HERMITIAN_TOL * max(1.0, max_abs_norm(a))
    asym = hermitian_asymmetry(a)
    if asym > tol:
        raise NotHermitianError(asym, tol)


def hermitian_eigenvalues(m) -> np.ndarray:
    """All eigenvalues of a Hermitian matrix, sorted ascending.

    Raises NotHermitianError when the input is visibly non-Hermitian.
    """
    a = as_matrix(m)
    _check_hermitian(a)
    return np.sort(np.linalg.eigvalsh(a))


def hermitian_eigenpairs(m) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and unit eigenvectors as columns."""
    a = as_matrix(m)
    _check_hermitian(a)
    return np.linalg.eigh(a)


def eigen_residual(m, values: np.ndarray, vectors: np.ndarray) -> float:
    """Largest ``||m v - lambda v||`` over the supplied pairs."""
    a = np.asarray(m)
    r = a @ vectors - vectors * values[np.newaxis, :]
    return float(np.max(np.linalg.norm(r, axis=0)))


def circulant_eigenvalues(first_row) -> np.ndarray:
    """Eigenvalues ``sum_j row[j] exp(2 pi i k j / N)``, k = 0..N-1, by direct summation.

    ``first_row`` defines ``C[i, j] = row[(j - i) mod N]``. Deliberately O(N^2)
    and FFT-free so it stays independent of the eigensolver it checks.
    """
    row = np.asarray(first_row, dtype=complex).ravel()
    n = row.size
    if n < 1:
        raise ValueError("first_row must be non-empty")
    k = np.arange(n)
    # integer product mod N keeps the phase argument small and exact
    phase = 2.0 * np.pi * (np.outer(k, k) % n) / n
    return np.exp(1j * phase) @ row


def circulant_matrix(first_row) -> np.ndarray:
    row = np.asarray(first_row, dtype=complex).ravel()
    n = row.size
    idx = (np.arange(n)[np.newaxis, :] - np.arange(n)[:, np.newaxis]) % n
    return row[idx]
