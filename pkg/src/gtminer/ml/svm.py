"""Linear SVM trained by Pegasos-style stochastic subgradient descent."""

from dataclasses import dataclass

import numpy as np

from ..errors import ParameterError
from ..prng import Xoshiro256
from .preprocessing import Standardization, binary_labels, standardize


@dataclass(frozen=True)
class LinearSVM:
    weights: np.ndarray
    bias: float
    scaler: Standardization
    lam: float

    @property
    def n_features(self):
        return self.weights.shape[0]

    def decision_function(self, X):
        return self.scaler.transform(X) @ self.weights + self.bias

    def predict(self, X):
        """0/1 labels; points exactly on the boundary go to class 1."""
        return (self.decision_function(X) >= 0.0).astype(int)


def objective(w, b, X, y, lam):
    """``lam/2 * (|w|^2 + b^2) + mean(max(0, 1 - y (w.x + b)))`` with y in {-1, +1}."""
    margins = y * (X @ w + b)
    return 0.5 * lam * (float(w @ w) + b * b) + float(np.mean(np.maximum(0.0, 1.0 - margins)))


def subgradient(w, b, X, y, lam):
    """A subgradient of :func:`objective`; exact gradient away from the hinge kink."""
    margins = y * (X @ w + b)
    active = margins < 1.0
    n = X.shape[0]
    gw = lam * w - (y[active, None] * X[active]).sum(axis=0) / n
    gb = lam * b - float(y[active].sum()) / n
    return gw, gb


def fit_linear_svm(table, epochs=1000, lam=1e-3, seed=42):
    """Fit on standardized features; outcome 1 maps to +1 and 0 to -1.

    Each epoch visits the rows in a fresh seeded permutation, stepping with
    rate ``1 / (lam * t)``. The bias is treated as a weight on a constant
    feature, so it is regularized too.
    """
    if epochs < 1:
        raise ParameterError("epochs must be >= 1")
    if lam <= 0:
        raise ParameterError("lambda must be positive")
    y01 = binary_labels(table.dv)
    if len(set(y01.tolist())) < 2:
        raise ParameterError("SVM needs both outcome classes present")
    y = np.where(y01 == 1, 1.0, -1.0)
    X, scaler = standardize(table.feature_matrix())
    n, F = X.shape
    rng = Xoshiro256(seed)
    w = np.zeros(F)
    b = 0.0
    t = 0
    rows = [X[i] for i in range(n)]
    for _ in range(epochs):
        for i in rng.permutation(n):
            t += 1
            eta = 1.0 / (lam * t)
            shrink = 1.0 - eta * lam
            xi, yi = rows[i], y[i]
            if yi * (float(xi @ w) + b) < 1.0:
                w = shrink * w + (eta * yi) * xi
                b = shrink * b + eta * yi
            else:
                w = shrink * w
                b = shrink * b
    return LinearSVM(w, float(b), scaler, lam)
