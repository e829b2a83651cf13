"""Gaussian naive Bayes with a per-feature variance floor."""

from __future__ import annotations

import numpy as np

from ..base import BaseEstimator, check_X_y, check_array, encode_labels
from ..errors import MissingClassInTrain


class GaussianNB(BaseEstimator):
    def __init__(self, var_floor: float = 1e-9):
        self.var_floor = var_floor

    def fit(self, X, y) -> "GaussianNB":
        X, y = check_X_y(X, y)
        codes, self.classes_ = encode_labels(y)
        k = len(self.classes_)
        if k < 2:
            raise MissingClassInTrain("training data has fewer than 2 classes")
        n, p = X.shape
        self.theta_ = np.empty((k, p))
        self.var_ = np.empty((k, p))
        self.log_prior_ = np.empty(k)
        for c in range(k):
            Xc = X[codes == c]
            self.theta_[c] = Xc.mean(axis=0)
            self.var_[c] = np.maximum(Xc.var(axis=0), self.var_floor)
            self.log_prior_[c] = np.log(len(Xc) / n)
        return self

    def _joint_log_likelihood(self, X):
        jll = np.empty((X.shape[0], len(self.classes_)))
        for c in range(len(self.classes_)):
            log_det = np.sum(np.log(2.0 * np.pi * self.var_[c]))
            mahal = np.sum((X - self.theta_[c]) ** 2 / self.var_[c], axis=1)
            jll[:, c] = self.log_prior_[c] - 0.5 * (log_det + mahal)
        return jll

    def predict(self, X):
        X = check_array(X)
        return self.classes_[np.argmax(self._joint_log_likelihood(X), axis=1)]
