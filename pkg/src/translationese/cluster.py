"""k-means clustering (k-means++ / Lloyd) and Adjusted Rand Index scoring."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from .base import BaseEstimator, check_array, encode_labels
from .errors import KTooLarge, SizeMismatch
from .features.extractor import FeatureMatrix

log = logging.getLogger(__name__)


def _comb2(x):
    return x * (x - 1) / 2.0


def adjusted_rand_index(pred, truth) -> float:
    """Pair-counting ARI with the expected-index chance correction."""
    pred = np.asarray(pred)
    truth = np.asarray(truth)
    if pred.shape != truth.shape:
        raise SizeMismatch(
            f"partitions cover {pred.shape} vs {truth.shape} documents"
        )
    n = len(pred)
    p_codes, p_classes = encode_labels(pred)
    t_codes, t_classes = encode_labels(truth)
    table = np.zeros((len(p_classes), len(t_classes)))
    np.add.at(table, (p_codes, t_codes), 1.0)
    index = _comb2(table).sum()
    a = _comb2(table.sum(axis=1)).sum()
    b = _comb2(table.sum(axis=0)).sum()
    total = _comb2(np.array(float(n)))
    expected = a * b / total if total > 0 else 0.0
    max_index = (a + b) / 2.0
    if max_index == expected:
        return 1.0  # both partitions trivially identical
    return float((index - expected) / (max_index - expected))


def _kmeanspp_init(X, k, rng):
    n = X.shape[0]
    centroids = np.empty((k, X.shape[1]))
    centroids[0] = X[rng.integers(n)]
    d2 = np.sum((X - centroids[0]) ** 2, axis=1)
    for c in range(1, k):
        probs = d2 / d2.sum() if d2.sum() > 0 else np.full(n, 1.0 / n)
        centroids[c] = X[rng.choice(n, p=probs)]
        d2 = np.minimum(d2, np.sum((X - centroids[c]) ** 2, axis=1))
    return centroids


def _lloyd(X, centroids, max_iter):
    """Returns (assignments, centroids, inertia, trace, iterations).

    The trace records inertia after every assignment step; Lloyd
    guarantees it is non-increasing.
    """
    k = centroids.shape[0]
    assign = None
    trace = []
    for it in range(1, max_iter + 1):
        d2 = ((X[:, None, :] - centroids[None, :, :]) ** 2).sum(axis=2)
        new_assign = np.argmin(d2, axis=1)
        inertia = float(d2[np.arange(len(X)), new_assign].sum())
        trace.append(inertia)
        if assign is not None and np.array_equal(new_assign, assign):
            return assign, centroids, inertia, trace, it
        assign = new_assign
        for c in range(k):
            members = X[assign == c]
            if len(members) == 0:
                # Reseed an empty cluster at the farthest point.
                far = int(np.argmax(d2[np.arange(len(X)), assign]))
                centroids[c] = X[far]
                log.warning("empty cluster %d reseeded at doc %d", c, far)
            else:
                centroids[c] = members.mean(axis=0)
    return assign, centroids, trace[-1], trace, max_iter


class KMeans(BaseEstimator):
    """Euclidean k-means, k-means++ init, best of several restarts."""

    def __init__(
        self,
        k: int = 3,
        seed: int = 0,
        max_iter: int = 300,
        restarts: int = 10,
    ):
        self.k = k
        self.seed = seed
        self.max_iter = max_iter
        self.restarts = restarts

    def fit(self, X, y=None) -> "KMeans":
        X = check_array(X)
        if self.k > X.shape[0]:
            raise KTooLarge(f"k={self.k} exceeds {X.shape[0]} documents")
        rng = np.random.default_rng(self.seed)
        best = None
        for _ in range(self.restarts):
            init = _kmeanspp_init(X, self.k, rng)
            assign, centroids, inertia, trace, its = _lloyd(
                X, init.copy(), self.max_iter
            )
            if best is None or inertia < best[2]:
                best = (assign, centroids, inertia, trace, its)
        self.labels_, self.centroids_, self.inertia_, self.inertia_trace_, self.iterations_ = best
        return self

    def fit_predict(self, X, y=None) -> np.ndarray:
        return self.fit(X).labels_

    def predict(self, X) -> np.ndarray:
        X = check_array(X)
        d2 = ((X[:, None, :] - self.centroids_[None, :, :]) ** 2).sum(axis=2)
        return np.argmin(d2, axis=1)


@dataclass(frozen=True)
class ClusteringReport:
    doc_ids: tuple[str, ...]
    assignments: np.ndarray
    centroids: np.ndarray
    inertia: float
    iterations: int
    ari: float | None
    true_labels: tuple[str, ...] | None
    coords: np.ndarray | None  # 2-D projection for plotting only
    zero_variance: bool = False

    def to_json(self) -> dict:
        return {
            "assignments": {
                d: int(c) for d, c in zip(self.doc_ids, self.assignments)
            },
            "inertia": self.inertia,
            "iterations": self.iterations,
            "ari": self.ari,
            "zero_variance": self.zero_variance,
        }

    def to_csv(self) -> str:
        lines = ["doc_id,true_label,cluster,x,y"]
        for i, doc_id in enumerate(self.doc_ids):
            truth = self.true_labels[i] if self.true_labels else ""
            x, y = (self.coords[i] if self.coords is not None else (0.0, 0.0))
            lines.append(f"{doc_id},{truth},{int(self.assignments[i])},{x!r},{y!r}")
        return "\n".join(lines) + "\n"


def _pca_2d(X: np.ndarray) -> np.ndarray:
    """Projection onto the top-2 principal axes; display only, the
    clustering itself runs in full feature dimension."""
    centered = X - X.mean(axis=0)
    _, _, vt = np.linalg.svd(centered, full_matrices=False)
    axes = vt[:2] if vt.shape[0] >= 2 else np.vstack([vt, np.zeros_like(vt[:1])])
    return centered @ axes.T


def cluster_and_score(
    matrix: FeatureMatrix,
    selection,
    k: int = 3,
    seed: int = 0,
    max_iter: int = 300,
    restarts: int = 10,
    zscore: bool = True,
) -> ClusteringReport:
    """Cluster on the selected features and score against origin labels."""
    sub = matrix.select_features(list(selection))
    X = sub.values.copy()
    zero_variance = bool(np.all(X.std(axis=0) == 0))
    if zero_variance:
        log.warning("all selected features have zero variance across docs")
    if zscore:
        mean, std = X.mean(axis=0), X.std(axis=0)
        std[std == 0] = 1.0
        X = (X - mean) / std
    km = KMeans(k=k, seed=seed, max_iter=max_iter, restarts=restarts).fit(X)
    truth = tuple(g.origin for g in sub.groups)
    return ClusteringReport(
        doc_ids=sub.doc_ids,
        assignments=km.labels_,
        centroids=km.centroids_,
        inertia=km.inertia_,
        iterations=km.iterations_,
        ari=adjusted_rand_index(km.labels_, np.array(truth)),
        true_labels=truth,
        coords=_pca_2d(X),
        zero_variance=zero_variance,
    )
