"""k-means clustering with k-means++ seeding."""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..errors import ParameterError
from ..prng import Xoshiro256
from .preprocessing import Standardization, standardize


@dataclass(frozen=True)
class KMeansResult:
    centroids: np.ndarray  # k x F, in the (standardized) space the clustering ran in
    labels: np.ndarray
    inertia: float
    iterations_run: int
    inertia_history: Tuple[float, ...]
    scaler: Standardization = None

    @property
    def centroids_original(self):
        """Centroids mapped back to the input units."""
        return self.centroids if self.scaler is None else self.scaler.inverse(self.centroids)


def _sq_distances(X, C):
    return ((X[:, None, :] - C[None, :, :]) ** 2).sum(axis=2)


def _assign(X, C):
    d = _sq_distances(X, C)
    labels = np.argmin(d, axis=1)  # ties go to the lowest centroid index
    return labels, d[np.arange(X.shape[0]), labels]


def kmeans_plus_plus(X, k, rng):
    """Indices of ``k`` seed points chosen with D^2 weighting."""
    n = X.shape[0]
    chosen = [rng.randbelow(n)]
    nearest = ((X - X[chosen[0]]) ** 2).sum(axis=1)
    for _ in range(1, k):
        weights = nearest.tolist()
        for c in chosen:
            weights[c] = 0.0
        idx = rng.weighted_index(weights)
        if idx in chosen:
            # every remaining point coincides with a seed
            idx = next(i for i in range(n) if i not in chosen)
        chosen.append(idx)
        nearest = np.minimum(nearest, ((X - X[idx]) ** 2).sum(axis=1))
    return chosen


def _lloyd(X, k, rng, max_iter, tol):
    C = X[kmeans_plus_plus(X, k, rng)].copy()
    history = []
    labels, dist = _assign(X, C)
    history.append(float(dist.sum()))
    it = 0
    for it in range(1, max_iter + 1):
        new_C = C.copy()
        for j in range(k):
            members = labels == j
            if members.any():
                new_C[j] = X[members].mean(axis=0)
        taken = set()
        for j in range(k):
            if not (labels == j).any():
                order = np.argsort(-dist, kind="stable")
                far = next(int(i) for i in order if int(i) not in taken)
                taken.add(far)
                new_C[j] = X[far]
        shift = float(np.sqrt(((new_C - C) ** 2).sum(axis=1)).max())
        C = new_C
        labels, dist = _assign(X, C)
        history.append(float(dist.sum()))
        if shift < tol:
            break
    return C, labels, float(dist.sum()), it, tuple(history)


def kmeans(features, k, seed=42, max_iter=300, tol=1e-6, standardize_features=True, n_init=10):
    """Lloyd's algorithm from k-means++ starts.

    Each run stops when no centroid moves more than ``tol`` or after
    ``max_iter`` iterations. A cluster left empty is re-seeded at the point
    farthest from its own centroid. ``n_init`` runs draw successive seeds from
    one generator and the lowest final inertia wins (earliest run on ties).
    ``inertia_history`` holds the assignment cost of every iteration of the
    winning run; it never increases.
    """
    X = np.asarray(features, dtype=float)
    if X.ndim != 2 or X.shape[0] == 0:
        raise ParameterError("k-means needs a non-empty feature matrix")
    n = X.shape[0]
    if not 1 <= k <= n:
        raise ParameterError(f"k must lie in 1..{n}, got {k}")
    if n_init < 1:
        raise ParameterError("n_init must be >= 1")
    scaler = None
    if standardize_features:
        X, scaler = standardize(X)
    rng = Xoshiro256(seed)
    best = None
    for _ in range(n_init):
        run = _lloyd(X, k, rng, max_iter, tol)
        if best is None or run[2] < best[2] - 1e-12:
            best = run
    C, labels, inertia, it, history = best
    return KMeansResult(C, labels, inertia, it, history, scaler)
