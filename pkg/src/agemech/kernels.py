"""Kernel functions and Gram-matrix assembly for the regressors."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

KERNEL_KINDS = ("rbf", "linear", "poly")


@dataclass(frozen=True)
class KernelSpec:
    """A kernel choice with its shape parameters.

    gamma=None means "resolve to 1/n_features when the data dimension is
    known" (the usual radial-basis default).
    """

    kind: str = "rbf"
    gamma: float | None = None
    degree: int = 3
    coef0: float = 1.0

    def __post_init__(self) -> None:
        if self.kind not in KERNEL_KINDS:
            raise ValueError(f"unknown kernel kind {self.kind!r}")
        if self.gamma is not None and not self.gamma > 0:
            raise ValueError("gamma must be positive when given")
        if self.kind == "poly":
            if int(self.degree) != self.degree or self.degree < 1:
                raise ValueError("degree must be a positive integer")
            if self.coef0 < 0:
                raise ValueError("coef0 must be non-negative")

    def resolve(self, n_features: int) -> "KernelSpec":
        """Pin gamma to 1/n_features if it was left unset."""
        if self.kind == "rbf" and self.gamma is None:
            if n_features < 1:
                raise ValueError("cannot resolve gamma without features")
            return KernelSpec("rbf", 1.0 / n_features, self.degree, self.coef0)
        return self


def kernel_eval(spec: KernelSpec, a, b) -> float:
    """Evaluate the kernel on a single pair of vectors."""
    a = np.asarray(a, dtype=np.float64).ravel()
    b = np.asarray(b, dtype=np.float64).ravel()
    if a.shape != b.shape:
        raise ValueError(f"vector shapes differ: {a.shape} vs {b.shape}")
    if spec.kind == "rbf":
        gamma = spec.resolve(a.size).gamma
        diff = a - b
        return float(np.exp(-gamma * np.dot(diff, diff)))
    if spec.kind == "linear":
        return float(np.dot(a, b))
    return float((np.dot(a, b) + spec.coef0) ** spec.degree)


def gram(spec: KernelSpec, X, Z=None) -> np.ndarray:
    """Kernel matrix K[i, j] = k(X[i], Z[j]); symmetric when Z is omitted.

    The square form is symmetrized explicitly so downstream solvers can rely
    on exact symmetry, and squared distances are clipped at zero before the
    exponential so the diagonal is exactly one.
    """
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 2:
        raise ValueError("X must be 2-D")
    square = Z is None
    Zm = X if square else np.asarray(Z, dtype=np.float64)
    if Zm.ndim != 2 or Zm.shape[1] != X.shape[1]:
        raise ValueError("Z must be 2-D with the same number of features")
    spec = spec.resolve(X.shape[1])

    if spec.kind == "rbf":
        sq = (
            (X * X).sum(axis=1)[:, None]
            + (Zm * Zm).sum(axis=1)[None, :]
            - 2.0 * (X @ Zm.T)
        )
        np.clip(sq, 0.0, None, out=sq)
        K = np.exp(-spec.gamma * sq)
    elif spec.kind == "linear":
        K = X @ Zm.T
    else:
        K = (X @ Zm.T + spec.coef0) ** spec.degree

    if square:
        K = 0.5 * (K + K.T)
    return K
