"""Binary classification scoring."""

from dataclasses import dataclass

import numpy as np

from ..errors import ParameterError
from .preprocessing import binary_labels


@dataclass(frozen=True)
class ConfusionMatrix:
    tp: int
    fp: int
    fn: int
    tn: int

    @property
    def total(self):
        return self.tp + self.fp + self.fn + self.tn

    @property
    def accuracy(self):
        return (self.tp + self.tn) / self.total if self.total else 0.0


def confusion_matrix(y_true, y_pred):
    """Counts with class 1 as the positive class."""
    t = np.asarray(y_true).astype(int)
    p = np.asarray(y_pred).astype(int)
    if t.shape != p.shape:
        raise ParameterError("prediction and truth lengths differ")
    return ConfusionMatrix(
        tp=int(np.sum((t == 1) & (p == 1))),
        fp=int(np.sum((t == 0) & (p == 1))),
        fn=int(np.sum((t == 1) & (p == 0))),
        tn=int(np.sum((t == 0) & (p == 0))),
    )


def evaluate_classifier(model, table):
    """Accuracy and confusion matrix of ``model.predict`` on ``table``."""
    if table.n_features != model.n_features:
        raise ParameterError(
            f"model expects {model.n_features} features, table has {table.n_features}"
        )
    y = binary_labels(table.dv)
    cm = confusion_matrix(y, model.predict(table.feature_matrix()))
    return cm.accuracy, cm
