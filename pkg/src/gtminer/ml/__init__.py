"""Numeric machine learning for triangulation over NumericTable data."""

from .cluster import KMeansResult, kmeans
from .metrics import ConfusionMatrix, confusion_matrix, evaluate_classifier
from .mlp import MLPModel, fit_mlp
from .neighbors import find_record, knn_neighbors
from .pca import PCAResult, jacobi_eigh, pca
from .preprocessing import SplitSpec, Standardization, oversample, standardize, train_test_split
from .svm import LinearSVM, fit_linear_svm

__all__ = [
    "ConfusionMatrix", "KMeansResult", "LinearSVM", "MLPModel", "PCAResult", "SplitSpec",
    "Standardization", "confusion_matrix", "evaluate_classifier", "find_record", "fit_linear_svm",
    "fit_mlp", "jacobi_eigh", "kmeans", "knn_neighbors", "oversample", "pca", "standardize",
    "train_test_split",
]
