"""Scaling, splitting and class rebalancing for numeric tables."""

import math
from dataclasses import dataclass

import numpy as np

from ..errors import ParameterError
from ..prng import Xoshiro256


@dataclass(frozen=True)
class Standardization:
    means: np.ndarray
    stds: np.ndarray  # zero-variance columns carry 1.0

    def transform(self, X):
        X = np.asarray(X, dtype=float)
        if X.ndim != 2 or X.shape[1] != self.means.shape[0]:
            raise ParameterError(
                f"expected {self.means.shape[0]} feature columns, got {X.shape[1] if X.ndim == 2 else X.shape}"
            )
        return (X - self.means) / self.stds

    def inverse(self, Z):
        return np.asarray(Z, dtype=float) * self.stds + self.means


def standardize(X):
    """Column z-scores with population standard deviation.

    Returns ``(Z, Standardization)``. Columns with zero variance are centred
    but not scaled.
    """
    X = np.asarray(X, dtype=float)
    if X.ndim != 2 or X.shape[0] == 0 or X.shape[1] == 0:
        raise ParameterError("cannot standardize an empty matrix")
    means = X.mean(axis=0)
    stds = X.std(axis=0)
    stds = np.where(stds > 0.0, stds, 1.0)
    scaler = Standardization(means, stds)
    return scaler.transform(X), scaler


@dataclass(frozen=True)
class SplitSpec:
    test_fraction: float = 0.2
    seed: int = 42

    def __post_init__(self):
        if not 0.0 < self.test_fraction < 1.0:
            raise ParameterError("test_fraction must lie strictly between 0 and 1")


def train_test_split(table, spec=SplitSpec()):
    """Seeded shuffle; the last ``ceil(test_fraction * N)`` shuffled rows form the test part."""
    n = table.n_rows
    if n < 5:
        raise ParameterError(f"need at least 5 rows to split, got {n}")
    order = Xoshiro256(spec.seed).permutation(n)
    n_test = min(max(1, math.ceil(spec.test_fraction * n)), n - 1)
    return table.take(order[: n - n_test]), table.take(order[n - n_test:])


def binary_labels(dv):
    """Validate a 0/1 outcome column and return it as an int array."""
    y = np.asarray(dv, dtype=float)
    if y.size and not np.all((y == 0.0) | (y == 1.0)):
        bad = sorted(set(float(v) for v in y if v not in (0.0, 1.0)))[:5]
        raise ParameterError(f"outcome must be binary 0/1; found {bad}")
    return y.astype(int)


def oversample(table, seed=42):
    """Duplicate minority-class rows (drawn with replacement) until both classes tie.

    Original rows keep their positions; duplicates are appended in draw order.
    """
    y = binary_labels(table.dv)
    counts = np.bincount(y, minlength=2)
    if counts.min() == 0:
        raise ParameterError("oversampling needs both outcome classes present")
    minority = int(np.argmin(counts))
    pool = [i for i, label in enumerate(y) if label == minority]
    rng = Xoshiro256(seed)
    extra = [pool[rng.randbelow(len(pool))] for _ in range(int(counts.max() - counts.min()))]
    return table.take(list(range(table.n_rows)) + extra)
