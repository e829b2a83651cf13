"""Chi-square feature ranking and top-k retention.

Continuous features are discretized into quantile bins; the statistic is
computed on the bin x class contingency table with expected counts from
the marginals.  Quantile edges are taken from the data values themselves
(no interpolation), so the ranking is invariant under strictly monotone
transformations of a feature.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from scipy.stats import chi2 as chi2_dist

from .base import BaseEstimator, check_array, encode_labels
from .errors import TooFewDocs

log = logging.getLogger(__name__)

DEFAULT_BINS = 10
DEFAULT_TOP_K = 30


@dataclass(frozen=True)
class RankedFeature:
    name: str
    chi2: float
    p_value: float


@dataclass(frozen=True)
class SelectionResult:
    ranked: tuple[RankedFeature, ...]  # descending by chi2
    retained: tuple[str, ...]

    def rank_of(self, name: str) -> int:
        for i, rf in enumerate(self.ranked):
            if rf.name == name:
                return i
        raise KeyError(name)


def quantile_bins(x: np.ndarray, bins: int) -> np.ndarray:
    """Assign each value a quantile-bin id.

    Edges are actual data values (lower-interpolation quantiles), so any
    strictly monotone transform of x yields identical assignments.
    """
    qs = np.arange(1, bins) / bins
    edges = np.unique(np.quantile(x, qs, method="lower"))
    # side="left": values equal to an edge stay below it, so a value
    # carrying a big tied mass keeps its own bin.
    return np.searchsorted(edges, x, side="left")


def chi2_statistic(bin_ids: np.ndarray, classes: np.ndarray, n_classes: int) -> tuple[float, int]:
    """(chi2, dof) on the bin x class contingency table.

    Bins with zero expected count cannot occur (every bin id present has
    at least one observation); bins are re-indexed densely first.
    """
    _, dense = np.unique(bin_ids, return_inverse=True)
    n_bins = dense.max() + 1
    if n_bins < 2:
        return 0.0, 0
    table = np.zeros((n_bins, n_classes))
    np.add.at(table, (dense, classes), 1.0)
    n = table.sum()
    expected = np.outer(table.sum(axis=1), table.sum(axis=0)) / n
    # Guard classes with zero column totals (cannot happen for encoded y).
    with np.errstate(invalid="ignore", divide="ignore"):
        terms = np.where(expected > 0, (table - expected) ** 2 / expected, 0.0)
    dof = (n_bins - 1) * (n_classes - 1)
    return float(terms.sum()), dof


class Chi2Ranker(BaseEstimator):
    """Rank features by the chi-square of their binned values vs labels."""

    def __init__(
        self,
        bins: int = DEFAULT_BINS,
        k: int = DEFAULT_TOP_K,
        feature_names=None,
    ):
        self.bins = bins
        self.k = k
        self.feature_names = feature_names

    def fit(self, X, y) -> "Chi2Ranker":
        X = check_array(X)
        names = self.feature_names or [f"f{i}" for i in range(X.shape[1])]
        self._name_index = {n: i for i, n in enumerate(names)}
        self.result_ = select_top_k(
            chi2_rank_arrays(X, y, names, bins=self.bins), self.k
        )
        return self

    def transform(self, X):
        X = check_array(X)
        return X[:, [self._name_index[n] for n in self.result_.retained]]

    def fit_transform(self, X, y):
        return self.fit(X, y).transform(X)


def chi2_rank_arrays(
    X, y, feature_names=None, bins: int = DEFAULT_BINS
) -> SelectionResult:
    X = check_array(X)
    codes, classes = encode_labels(y)
    if len(classes) < 2:
        raise TooFewDocs("chi-square ranking needs at least 2 classes")
    if X.shape[0] < 2:
        raise TooFewDocs("chi-square ranking needs at least 2 documents")
    if feature_names is None:
        feature_names = [f"f{i}" for i in range(X.shape[1])]
    if bins < 2:
        raise ValueError("bins must be >= 2")

    scored = []
    for j, name in enumerate(feature_names):
        col = X[:, j]
        if np.all(col == col[0]):
            # Constant (degenerate) feature: defined score 0, ranks last.
            scored.append(RankedFeature(name, 0.0, 1.0))
            continue
        stat, dof = chi2_statistic(quantile_bins(col, bins), codes, len(classes))
        p = float(chi2_dist.sf(stat, dof)) if dof > 0 else 1.0
        scored.append(RankedFeature(name, stat, p))

    ranked = tuple(sorted(scored, key=lambda rf: (-rf.chi2, rf.name)))
    return SelectionResult(ranked, tuple(rf.name for rf in ranked))


def chi2_rank(matrix, labels, bins: int = DEFAULT_BINS) -> SelectionResult:
    """Rank every feature of a FeatureMatrix against *labels*."""
    return chi2_rank_arrays(matrix.values, labels, matrix.feature_names, bins=bins)


def select_top_k(result: SelectionResult, k: int = DEFAULT_TOP_K) -> SelectionResult:
    """Retain the first min(k, all) ranked names; fewer than k keeps all."""
    if k <= 0:
        log.warning("top-k selection with k=%d retains nothing", k)
        return SelectionResult(result.ranked, ())
    names = tuple(rf.name for rf in result.ranked[:k])
    return SelectionResult(result.ranked, names)


def shared_top_features(results: list[SelectionResult]) -> tuple[str, ...]:
    """Deduplicated union of retained sets, ordered by best rank."""
    if len(results) < 2:
        raise ValueError("need at least 2 selection results to share")
    best: dict[str, int] = {}
    for res in results:
        for name in res.retained:
            rank = res.rank_of(name)
            if name not in best or rank < best[name]:
                best[name] = rank
    return tuple(sorted(best, key=lambda n: (best[n], n)))


def selection_to_csv(result: SelectionResult) -> str:
    lines = ["rank,feature,chi2,p"]
    for i, rf in enumerate(result.ranked, 1):
        lines.append(f"{i},{rf.name},{rf.chi2!r},{rf.p_value!r}")
    return "\n".join(lines) + "\n"


def selection_to_json(result: SelectionResult) -> dict:
    return {
        "ranked": [
            {"rank": i + 1, "feature": rf.name, "chi2": rf.chi2, "p": rf.p_value}
            for i, rf in enumerate(result.ranked)
        ],
        "retained": list(result.retained),
    }
