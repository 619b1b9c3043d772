"""Principal component analysis of standardized data via Jacobi rotations."""

import math
from dataclasses import dataclass

import numpy as np

from ..errors import ParameterError
from .preprocessing import standardize


@dataclass(frozen=True)
class PCAResult:
    components: np.ndarray  # n_factors x F, orthonormal rows
    explained_variance: np.ndarray  # eigenvalues, descending
    scores: np.ndarray  # records x n_factors
    total_variance: float

    @property
    def explained_ratio(self):
        return self.explained_variance / self.total_variance if self.total_variance else self.explained_variance * 0.0


def jacobi_eigh(A, tol=1e-12, max_sweeps=100):
    """Eigen-decomposition of a symmetric matrix by cyclic Jacobi rotations.

    Returns ``(eigenvalues, eigenvectors)`` with eigenvectors in the columns,
    unsorted. Sweeps stop once the off-diagonal Frobenius norm drops below
    ``tol``.
    """
    A = np.array(A, dtype=float)
    n = A.shape[0]
    V = np.eye(n)
    off_diagonal = ~np.eye(n, dtype=bool)
    for _ in range(max_sweeps):
        off = math.sqrt(float((A[off_diagonal] ** 2).sum()))
        if off < tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if apq == 0.0:
                    continue
                theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                # A <- J^T A J for the rotation J in the (p, q) plane
                Ap = A[:, p].copy()
                Aq = A[:, q].copy()
                A[:, p] = c * Ap - s * Aq
                A[:, q] = s * Ap + c * Aq
                Ap = A[p, :].copy()
                Aq = A[q, :].copy()
                A[p, :] = c * Ap - s * Aq
                A[q, :] = s * Ap + c * Aq
                A[p, q] = A[q, p] = 0.0
                Vp = V[:, p].copy()
                Vq = V[:, q].copy()
                V[:, p] = c * Vp - s * Vq
                V[:, q] = s * Vp + c * Vq
    else:
        raise ParameterError("Jacobi eigen-decomposition did not converge")
    return np.diag(A).copy(), V


def pca(features, n_factors):
    """Leading ``n_factors`` components of the correlation structure.

    Each component's largest-magnitude loading is made positive.
    """
    X = np.asarray(features, dtype=float)
    if X.ndim != 2 or X.shape[0] < 2:
        raise ParameterError("PCA needs at least 2 records")
    rows, F = X.shape
    if not 1 <= n_factors <= min(rows, F):
        raise ParameterError(f"number of factors must lie in 1..{min(rows, F)}, got {n_factors}")
    Z, _ = standardize(X)
    cov = (Z.T @ Z) / rows
    values, vectors = jacobi_eigh(cov)
    order = sorted(range(F), key=lambda i: (-values[i], i))[:n_factors]
    components = []
    for i in order:
        v = vectors[:, i].copy()
        j = int(np.argmax(np.abs(v)))
        if v[j] < 0:
            v = -v
        components.append(v)
    components = np.array(components)
    return PCAResult(
        components=components,
        explained_variance=np.array([max(values[i], 0.0) for i in order]),
        scores=Z @ components.T,
        total_variance=float(np.trace(cov)),
    )
