"""Multinomial logistic regression, L2-regularized, full-batch gradient
descent to a gradient-norm tolerance.  Expects standardized features."""

from __future__ import annotations

import numpy as np

from ..base import BaseEstimator, check_X_y, check_array, encode_labels
from ..errors import MissingClassInTrain


def _softmax(z):
    z = z - z.max(axis=1, keepdims=True)
    e = np.exp(z)
    return e / e.sum(axis=1, keepdims=True)


class LogisticRegression(BaseEstimator):
    def __init__(
        self,
        l2: float = 1e-4,
        max_epochs: int = 500,
        tol: float = 1e-6,
        learning_rate: float = 0.5,
    ):
        self.l2 = l2
        self.max_epochs = max_epochs
        self.tol = tol
        self.learning_rate = learning_rate

    def fit(self, X, y) -> "LogisticRegression":
        X, y = check_X_y(X, y)
        codes, self.classes_ = encode_labels(y)
        k = len(self.classes_)
        if k < 2:
            raise MissingClassInTrain("training data has fewer than 2 classes")
        n, p = X.shape
        Xb = np.hstack([X, np.ones((n, 1))])
        W = np.zeros((p + 1, k))
        T = np.zeros((n, k))
        T[np.arange(n), codes] = 1.0
        for _ in range(self.max_epochs):
            P = _softmax(Xb @ W)
            grad = Xb.T @ (P - T) / n
            grad[:-1] += self.l2 * W[:-1]  # bias not regularized
            W -= self.learning_rate * grad
            if np.abs(grad).max() < self.tol:
                break
        self.coef_ = W
        return self

    def decision_function(self, X):
        X = check_array(X)
        Xb = np.hstack([X, np.ones((X.shape[0], 1))])
        return Xb @ self.coef_

    def predict(self, X):
        return self.classes_[np.argmax(self.decision_function(X), axis=1)]
