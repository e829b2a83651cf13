"""The five-classifier ensemble and its pinned default hyperparameters.

"Default settings" are toolkit-relative; the values here are frozen (and
recorded in every run manifest) so reported numbers stay re-derivable.
"""

from __future__ import annotations

from .forest import RandomForest
from .logistic import LogisticRegression
from .naive_bayes import GaussianNB
from .svm import LinearSVM
from .tree import DecisionTree

HYPERPARAMS_VERSION = 1

# Canonical order; reports list classifiers in this order.
CLASSIFIER_KINDS = (
    "naive_bayes",
    "logistic_regression",
    "linear_svm",
    "decision_tree",
    "random_forest",
)

DEFAULT_HYPERPARAMS = {
    "version": HYPERPARAMS_VERSION,
    "naive_bayes": {"var_floor": 1e-9},
    "logistic_regression": {"l2": 1e-4, "max_epochs": 500, "tol": 1e-6},
    "linear_svm": {"l2": 1e-4, "max_epochs": 1000},
    "decision_tree": {"max_depth": None, "min_samples_split": 2},
    "random_forest": {"n_trees": 100, "max_depth": None, "min_samples_split": 2},
}

# Scale-sensitive learners get per-fold z-scored features; tree-based and
# Gaussian NB learners take raw features.
NEEDS_STANDARDIZATION = frozenset({"logistic_regression", "linear_svm"})

_CLASSES = {
    "naive_bayes": GaussianNB,
    "logistic_regression": LogisticRegression,
    "linear_svm": LinearSVM,
    "decision_tree": DecisionTree,
    "random_forest": RandomForest,
}


def make_classifier(kind: str, seed: int = 0, **overrides):
    """Instantiate a classifier by kind with the pinned defaults."""
    if kind not in _CLASSES:
        raise ValueError(f"unknown classifier kind {kind!r}")
    params = dict(DEFAULT_HYPERPARAMS[kind])
    params.update(overrides)
    cls = _CLASSES[kind]
    if "seed" in cls._param_names():
        params.setdefault("seed", seed)
    return cls(**params)


__all__ = [
    "CLASSIFIER_KINDS",
    "DEFAULT_HYPERPARAMS",
    "DecisionTree",
    "GaussianNB",
    "HYPERPARAMS_VERSION",
    "LinearSVM",
    "LogisticRegression",
    "NEEDS_STANDARDIZATION",
    "RandomForest",
    "make_classifier",
]
