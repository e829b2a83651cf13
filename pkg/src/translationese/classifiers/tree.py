"""CART decision tree (Gini impurity) and the split search shared with
the random forest."""

from __future__ import annotations

import numpy as np

from ..base import BaseEstimator, check_X_y, check_array, encode_labels
from ..errors import MissingClassInTrain


def _gini_from_counts(counts, n):
    # counts: (..., n_classes); n: matching sample counts
    with np.errstate(invalid="ignore", divide="ignore"):
        p = counts / n[..., None]
        g = 1.0 - np.sum(p * p, axis=-1)
    return np.where(n > 0, g, 0.0)


def _best_split_feature(x, y_onehot, n_classes):
    """Best threshold on one feature; returns (weighted_gini, threshold)."""
    order = np.argsort(x, kind="stable")
    xs = x[order]
    prefix = np.cumsum(y_onehot[order], axis=0)  # (n, k)
    n = len(xs)
    total = prefix[-1]
    cut = np.nonzero(xs[:-1] < xs[1:])[0]  # split after position i
    if len(cut) == 0:
        return None
    left_n = (cut + 1).astype(float)
    right_n = n - left_n
    left_counts = prefix[cut]
    right_counts = total - left_counts
    weighted = (
        left_n * _gini_from_counts(left_counts, left_n)
        + right_n * _gini_from_counts(right_counts, right_n)
    ) / n
    best = int(np.argmin(weighted))
    i = cut[best]
    return float(weighted[best]), (xs[i] + xs[i + 1]) / 2.0


class _Node:
    __slots__ = ("feature", "threshold", "left", "right", "prediction")

    def __init__(self, prediction=None):
        self.feature = None
        self.threshold = None
        self.left = None
        self.right = None
        self.prediction = prediction


def _build(X, codes, n_classes, depth, max_depth, min_samples_split, max_features, rng):
    counts = np.bincount(codes, minlength=n_classes)
    majority = int(np.argmax(counts))
    node = _Node(prediction=majority)
    n = len(codes)
    if (
        n < min_samples_split
        or counts[majority] == n
        or (max_depth is not None and depth >= max_depth)
    ):
        return node

    p = X.shape[1]
    if max_features is not None and max_features < p:
        features = rng.choice(p, size=max_features, replace=False)
    else:
        features = np.arange(p)

    onehot = np.zeros((n, n_classes))
    onehot[np.arange(n), codes] = 1.0
    parent_gini = float(_gini_from_counts(counts.astype(float), np.array(float(n))))
    best = None
    for j in features:
        res = _best_split_feature(X[:, j], onehot, n_classes)
        if res is None:
            continue
        weighted, threshold = res
        if best is None or weighted < best[0]:
            best = (weighted, int(j), threshold)
    if best is None or best[0] >= parent_gini:
        return node

    _, j, threshold = best
    mask = X[:, j] <= threshold
    node.feature = j
    node.threshold = threshold
    node.left = _build(
        X[mask], codes[mask], n_classes, depth + 1, max_depth,
        min_samples_split, max_features, rng,
    )
    node.right = _build(
        X[~mask], codes[~mask], n_classes, depth + 1, max_depth,
        min_samples_split, max_features, rng,
    )
    return node


def _predict_node(node, row):
    while node.feature is not None:
        node = node.left if row[node.feature] <= node.threshold else node.right
    return node.prediction


class DecisionTree(BaseEstimator):
    """CART with Gini impurity; unlimited depth by default."""

    def __init__(
        self,
        max_depth: int | None = None,
        min_samples_split: int = 2,
        max_features: int | None = None,
        seed: int = 0,
    ):
        self.max_depth = max_depth
        self.min_samples_split = min_samples_split
        self.max_features = max_features
        self.seed = seed

    def fit(self, X, y) -> "DecisionTree":
        X, y = check_X_y(X, y)
        codes, self.classes_ = encode_labels(y)
        if len(self.classes_) < 2:
            raise MissingClassInTrain("training data has fewer than 2 classes")
        rng = np.random.default_rng(self.seed)
        self.root_ = _build(
            X, codes, len(self.classes_), 0, self.max_depth,
            self.min_samples_split, self.max_features, rng,
        )
        return self

    def predict(self, X):
        X = check_array(X)
        return self.classes_[[_predict_node(self.root_, row) for row in X]]
