"""Random forest: bagged CART trees with sqrt(p) features per split."""

from __future__ import annotations

import math

import numpy as np

from ..base import BaseEstimator, check_X_y, check_array, encode_labels
from ..errors import MissingClassInTrain
from .tree import DecisionTree


class RandomForest(BaseEstimator):
    def __init__(
        self,
        n_trees: int = 100,
        max_depth: int | None = None,
        min_samples_split: int = 2,
        seed: int = 0,
    ):
        self.n_trees = n_trees
        self.max_depth = max_depth
        self.min_samples_split = min_samples_split
        self.seed = seed

    def fit(self, X, y) -> "RandomForest":
        X, y = check_X_y(X, y)
        codes, self.classes_ = encode_labels(y)
        if len(self.classes_) < 2:
            raise MissingClassInTrain("training data has fewer than 2 classes")
        n, p = X.shape
        max_features = max(1, int(math.sqrt(p)))
        rng = np.random.default_rng(self.seed)
        self.trees_ = []
        for _ in range(self.n_trees):
            idx = rng.integers(0, n, size=n)  # bootstrap sample
            while len(np.unique(codes[idx])) < 2:  # degenerate draw, redo
                idx = rng.integers(0, n, size=n)
            tree = DecisionTree(
                max_depth=self.max_depth,
                min_samples_split=self.min_samples_split,
                max_features=max_features,
                seed=int(rng.integers(0, 2**31 - 1)),
            )
            tree.fit(X[idx], codes[idx])
            self.trees_.append(tree)
        return self

    def predict(self, X):
        X = check_array(X)
        k = len(self.classes_)
        votes = np.zeros((X.shape[0], k))
        for tree in self.trees_:
            pred = tree.predict(X).astype(int)  # global label codes
            votes[np.arange(len(pred)), pred] += 1
        return self.classes_[np.argmax(votes, axis=1)]
