"""One-hidden-layer perceptron for binary outcomes, trained by full-batch gradient descent."""

import math
from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np

from ..errors import ParameterError
from ..prng import Xoshiro256
from .preprocessing import Standardization, binary_labels, standardize


def hidden_size(n_features):
    return max(4, 2 * n_features)


@dataclass
class MLPParams:
    W1: np.ndarray  # H x F
    b1: np.ndarray  # H
    W2: np.ndarray  # H
    b2: float

    def copy(self):
        return MLPParams(self.W1.copy(), self.b1.copy(), self.W2.copy(), float(self.b2))


@dataclass(frozen=True)
class MLPModel:
    layer_sizes: Tuple[int, int, int]
    params: MLPParams
    scaler: Standardization
    curve: Tuple[Tuple[float, float], ...] = field(default=())  # (train accuracy, train loss) per epoch

    @property
    def n_features(self):
        return self.layer_sizes[0]

    def predict_proba(self, X):
        return forward(self.params, self.scaler.transform(X))[1]

    def predict(self, X):
        return (self.predict_proba(X) >= 0.5).astype(int)


def xavier_init(n_features, rng):
    """Xavier-uniform weights drawn from ``rng``; biases start at zero."""
    H = hidden_size(n_features)
    lim1 = math.sqrt(6.0 / (n_features + H))
    lim2 = math.sqrt(6.0 / (H + 1))
    W1 = np.array([[rng.uniform(-lim1, lim1) for _ in range(n_features)] for _ in range(H)])
    W2 = np.array([rng.uniform(-lim2, lim2) for _ in range(H)])
    return MLPParams(W1, np.zeros(H), W2, 0.0)


def _sigmoid(z):
    out = np.empty_like(z)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out


def forward(params, X):
    """Return ``(hidden activations, output probabilities, output logits)``."""
    h = np.tanh(X @ params.W1.T + params.b1)
    z = h @ params.W2 + params.b2
    return h, _sigmoid(z), z


def loss_and_gradients(params, X, y):
    """Mean binary cross-entropy and its exact gradient with respect to ``params``."""
    h, p, z = forward(params, X)
    n = X.shape[0]
    # log(1 + e^z) - y z  ==  cross-entropy of sigmoid(z), without overflow
    loss = float(np.mean(np.logaddexp(0.0, z) - y * z))
    dz = (p - y) / n
    gW2 = h.T @ dz
    gb2 = float(dz.sum())
    dh = np.outer(dz, params.W2) * (1.0 - h * h)
    gW1 = dh.T @ X
    gb1 = dh.sum(axis=0)
    return loss, MLPParams(gW1, gb1, gW2, gb2)


def fit_mlp(table, epochs, seed=42, learning_rate=0.1):
    """Train an F -> max(4, 2F) -> 1 tanh/logistic network on ``table``.

    Features are standardized first. After every epoch the training accuracy
    (threshold 0.5) and loss are appended to ``curve``.
    """
    if epochs < 1:
        raise ParameterError("epochs must be >= 1")
    if table.n_rows == 0:
        raise ParameterError("cannot train on an empty table")
    y = binary_labels(table.dv).astype(float)
    X, scaler = standardize(table.feature_matrix())
    params = xavier_init(table.n_features, Xoshiro256(seed))
    curve = []
    for _ in range(epochs):
        _, grads = loss_and_gradients(params, X, y)
        params.W1 -= learning_rate * grads.W1
        params.b1 -= learning_rate * grads.b1
        params.W2 -= learning_rate * grads.W2
        params.b2 -= learning_rate * grads.b2
        loss, _ = loss_and_gradients(params, X, y)
        acc = float(np.mean((forward(params, X)[1] >= 0.5) == (y == 1.0)))
        curve.append((acc, loss))
    F = table.n_features
    return MLPModel((F, hidden_size(F), 1), params, scaler, tuple(curve))
