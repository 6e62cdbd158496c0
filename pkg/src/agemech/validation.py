"""Small input-validation helpers used by the estimators and metrics."""

from __future__ import annotations

import numpy as np


def as_matrix(x, name: str = "X") -> np.ndarray:
    """Coerce to a finite 2-D float64 array (n_samples, n_features)."""
    arr = np.asarray(x, dtype=np.float64)
    if arr.ndim == 1:
        arr = arr.reshape(-1, 1)
    if arr.ndim != 2:
        raise ValueError(f"{name} must be 2-D, got ndim={arr.ndim}")
    if arr.size and not np.isfinite(arr).all():
        raise ValueError(f"{name} contains non-finite values")
    return arr


def as_vector(x, name: str = "y") -> np.ndarray:
    """Coerce to a finite 1-D float64 array."""
    arr = np.asarray(x, dtype=np.float64).ravel()
    if arr.size and not np.isfinite(arr).all():
        raise ValueError(f"{name} contains non-finite values")
    return arr


def as_bool_vector(x, name: str = "mask") -> np.ndarray:
    arr = np.asarray(x)
    if arr.dtype != np.bool_:
        uniq = np.unique(arr)
        if not np.isin(uniq, (0, 1)).all():
            raise ValueError(f"{name} must be boolean or 0/1 valued")
        arr = arr.astype(bool)
    return arr.ravel()


def check_same_length(*arrays, names: str = "inputs") -> int:
    lengths = {len(a) for a in arrays}
    if len(lengths) > 1:
        raise ValueError(f"{names} have mismatched lengths {sorted(lengths)}")
    return lengths.pop()


def check_paired(X: np.ndarray, y: np.ndarray) -> None:
    if X.shape[0] != y.shape[0]:
        raise ValueError(
            f"X has {X.shape[0]} rows but y has {y.shape[0]} entries"
        )
