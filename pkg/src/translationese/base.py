"""Minimal estimator base class and input-validation helpers.

The estimators in this package follow the scikit-learn convention
(``__init__`` stores hyperparameters verbatim, ``fit`` learns state on
attributes ending in ``_``, ``get_params``/``set_params`` expose the
hyperparameters) so they compose with pipeline-style tooling, without
depending on scikit-learn itself.
"""

from __future__ import annotations

import inspect

import numpy as np

from .errors import NonFiniteFeature, SizeMismatch


class BaseEstimator:
    """get_params/set_params over the constructor signature."""

    @classmethod
    def _param_names(cls):
        sig = inspect.signature(cls.__init__)
        return [
            name
            for name, p in sig.parameters.items()
            if name != "self" and p.kind != p.VAR_KEYWORD
        ]

    def get_params(self, deep: bool = True) -> dict:
        return {name: getattr(self, name) for name in self._param_names()}

    def set_params(self, **params):
        valid = set(self._param_names())
        for name, value in params.items():
            if name not in valid:
                raise ValueError(
                    f"invalid parameter {name!r} for {type(self).__name__}"
                )
            setattr(self, name, value)
        return self

    def __repr__(self):
        args = ", ".join(f"{k}={v!r}" for k, v in self.get_params().items())
        return f"{type(self).__name__}({args})"


def check_array(X, *, name: str = "X") -> np.ndarray:
    """Coerce to a 2-D float array and reject non-finite values."""
    X = np.asarray(X, dtype=float)
    if X.ndim == 1:
        X = X.reshape(-1, 1)
    if X.ndim != 2:
        raise ValueError(f"{name} must be 2-D, got shape {X.shape}")
    if not np.isfinite(X).all():
        raise NonFiniteFeature(f"{name} contains NaN or infinite values")
    return X


def check_X_y(X, y):
    X = check_array(X)
    y = np.asarray(y)
    if y.ndim != 1 or len(y) != X.shape[0]:
        raise SizeMismatch(
            f"y has shape {y.shape}, expected ({X.shape[0]},)"
        )
    return X, y


def encode_labels(y) -> tuple[np.ndarray, np.ndarray]:
    """Map arbitrary labels to 0..k-1 codes; returns (codes, classes)."""
    y = np.asarray(y)
    classes, codes = np.unique(y, return_inverse=True)
    return codes, classes
