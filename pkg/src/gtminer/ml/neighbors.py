"""Exact nearest-neighbour lookup over standardized features."""

import numpy as np

from ..errors import ParameterError
from .preprocessing import standardize


def knn_neighbors(table, record_index, n):
    """The ``n`` rows closest to row ``record_index``.

    Euclidean distance over z-scored feature columns (identifier and outcome
    excluded). Returns ``[(row_index, distance), ...]`` ordered by distance,
    then row index.
    """
    rows = table.n_rows
    if not 0 <= record_index < rows:
        raise ParameterError(f"record index {record_index} out of range 0..{rows - 1}")
    if not 1 <= n <= rows - 1:
        raise ParameterError(f"number of neighbours must lie in 1..{rows - 1}, got {n}")
    Z, _ = standardize(table.feature_matrix())
    d = np.sqrt(((Z - Z[record_index]) ** 2).sum(axis=1))
    candidates = [(float(d[i]), i) for i in range(rows) if i != record_index]
    candidates.sort()
    return [(i, dist) for dist, i in candidates[:n]]


def find_record(table, record):
    """Row index for a ``-r`` value: an identifier match first, else a 0-based index."""
    key = str(record)
    for i, ident in enumerate(table.ids):
        if ident == key:
            return i
    try:
        idx = int(record)
    except ValueError:
        raise ParameterError(f"no record with identifier {record!r}") from None
    if 0 <= idx < table.n_rows:
        return idx
    raise ParameterError(f"no record with identifier {record!r}")
