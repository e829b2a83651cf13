"""Linear SVM trained by the Pegasos hinge-loss subgradient scheme.

Full-batch subgradient steps with the 1/(lambda * t) schedule; linear
kernel only.  Multi-class is handled one-vs-rest; ties resolve to the
largest margin.  Expects standardized features.
"""

from __future__ import annotations

import numpy as np

from ..base import BaseEstimator, check_X_y, check_array, encode_labels
from ..errors import MissingClassInTrain


class LinearSVM(BaseEstimator):
    def __init__(self, l2: float = 1e-4, max_epochs: int = 1000, seed: int = 0):
        self.l2 = l2
        self.max_epochs = max_epochs
        self.seed = seed  # kept for interface symmetry; training is deterministic

    def _fit_binary(self, Xb, target):
        n, p = Xb.shape
        w = np.zeros(p)
        for t in range(1, self.max_epochs + 1):
            eta = 1.0 / (self.l2 * t)
            margins = target * (Xb @ w)
            violators = margins < 1.0
            # Bias (last column) is excluded from the shrinkage step.
            w[:-1] *= 1.0 - eta * self.l2
            if violators.any():
                w += eta * (target[violators, None] * Xb[violators]).mean(axis=0)
        return w

    def fit(self, X, y) -> "LinearSVM":
        X, y = check_X_y(X, y)
        codes, self.classes_ = encode_labels(y)
        k = len(self.classes_)
        if k < 2:
            raise MissingClassInTrain("training data has fewer than 2 classes")
        n = X.shape[0]
        Xb = np.hstack([X, np.ones((n, 1))])
        if k == 2:
            target = np.where(codes == 1, 1.0, -1.0)
            self.weights_ = self._fit_binary(Xb, target)[None, :]
        else:
            self.weights_ = np.vstack(
                [
                    self._fit_binary(Xb, np.where(codes == c, 1.0, -1.0))
                    for c in range(k)
                ]
            )
        return self

    def decision_function(self, X):
        X = check_array(X)
        Xb = np.hstack([X, np.ones((X.shape[0], 1))])
        return Xb @ self.weights_.T

    def predict(self, X):
        scores = self.decision_function(X)
        if len(self.classes_) == 2:
            return self.classes_[(scores[:, 0] > 0).astype(int)]
        return self.classes_[np.argmax(scores, axis=1)]
