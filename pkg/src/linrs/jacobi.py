"""Cyclic Jacobi eigenvalue iteration for dense real symmetric matrices."""

from __future__ import annotations

import numpy as np

from .errors import NumericalError


def jacobi_eigenvalues(A, tol: float = 1e-12, max_sweeps: int = 100):
    """Eigenvalues of symmetric ``A`` by cyclic Jacobi rotations.

    Sweeps over all (i, j) pairs in row order, annihilating each
    off-diagonal entry with a Givens rotation, until the off-diagonal
    Frobenius norm drops below ``tol * ||A||_F``.

    Returns
    -------
    eigenvalues : ndarray
        Sorted ascending.
    sweeps : int
    residual : float
        Final off-diagonal Frobenius norm.
    """
    A = np.array(A, dtype=np.float64, copy=True)
    n = A.shape[0]
    if A.shape != (n, n) or not np.allclose(A, A.T):
        raise ValueError("matrix must be square and symmetric")
    scale = np.linalg.norm(A)
    target = tol * (scale if scale > 0 else 1.0)

    def off_norm():
        return float(np.sqrt(max(np.sum(A * A) - np.sum(np.diag(A) ** 2), 0.0)))

    off = off_norm()
    sweeps = 0
    while off > target:
        if sweeps >= max_sweeps:
            raise NumericalError(
                f"Jacobi did not converge in {max_sweeps} sweeps (residual {off:.3e})")
        for i in range(n - 1):
            for j in range(i + 1, n):
                aij = A[i, j]
                if abs(aij) <= 1e-300:
                    continue
                theta = (A[j, j] - A[i, i]) / (2.0 * aij)
                t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0)) if theta != 0 else 1.0
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                Ai = A[:, i].copy()
                Aj = A[:, j].copy()
                A[:, i] = c * Ai - s * Aj
                A[:, j] = s * Ai + c * Aj
                Ai = A[i, :].copy()
                Aj = A[j, :].copy()
                A[i, :] = c * Ai - s * Aj
                A[j, :] = s * Ai + c * Aj
                A[i, j] = A[j, i] = 0.0
        sweeps += 1
        off = off_norm()
    return np.sort(np.diag(A)), sweeps, off
