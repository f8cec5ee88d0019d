"""Input validation helpers used by estimators and metric functions."""

import numpy as np

from .errors import NotFittedError, ShapeError


def check_matrix(X, name="X", n_cols=None, min_rows=1):
    """Coerce to a finite float64 2-D array, raising ShapeError otherwise."""
    arr = np.asarray(X, dtype=np.float64)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    if arr.ndim != 2:
        raise ShapeError(f"{name} must be 2-D, got shape {arr.shape}")
    if arr.shape[0] < min_rows:
        raise ShapeError(f"{name} needs at least {min_rows} rows, got {arr.shape[0]}")
    if n_cols is not None and arr.shape[1] != n_cols:
        raise ShapeError(f"{name} has shape {arr.shape}, expected {n_cols} columns")
    if not np.isfinite(arr).all():
        raise ShapeError(f"{name} contains non-finite entries")
    return arr


def check_vector(x, name="x", length=None):
    arr = np.asarray(x, dtype=np.float64).ravel()
    if length is not None and arr.shape[0] != length:
        raise ShapeError(f"{name} has length {arr.shape[0]}, expected {length}")
    if not np.isfinite(arr).all():
        raise ShapeError(f"{name} contains non-finite entries")
    return arr


def check_same_columns(X, Y, names=("X", "Y")):
    if X.shape[1] != Y.shape[1]:
        raise ShapeError(
            f"{names[0]} and {names[1]} disagree on feature count: "
            f"{X.shape} vs {Y.shape}"
        )


def check_is_fitted(estimator, attribute):
    if getattr(estimator, attribute, None) is None:
        raise NotFittedError(
            f"{type(estimator).__name__} is not fitted; call fit() first"
        )
