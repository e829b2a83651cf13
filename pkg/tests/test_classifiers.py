import numpy as np
import pytest

from translationese.classifiers import (
    CLASSIFIER_KINDS,
    DEFAULT_HYPERPARAMS,
    make_classifier,
)
from translationese.evaluation import EvaluationProtocol, evaluate_arrays


def separable(seed=0, n=200, gap=5.0, p=4):
    rng = np.random.default_rng(seed)
    y = np.repeat([0, 1], n // 2)
    X = rng.normal(size=(n, p))
    X[:, 0] += np.where(y == 0, -gap, gap)
    return X, y


def blobs3(seed=0, n_per=40, gap=8.0):
    rng = np.random.default_rng(seed)
    centers = np.array([[0.0, 0.0], [gap, 0.0], [0.0, gap]])
    X = np.vstack(
        [rng.normal(size=(n_per, 2)) + c for c in centers]
    )
    y = np.repeat([0, 1, 2], n_per)
    return X, y


@pytest.mark.parametrize("kind", CLASSIFIER_KINDS)
def test_separable_binary_cv_accuracy(kind):
    X, y = separable()
    report = evaluate_arrays(
        X, y, EvaluationProtocol(folds=5, seed=0), kinds=(kind,)
    )
    assert report.per_classifier[0].acc >= 0.95, kind


@pytest.mark.parametrize("kind", CLASSIFIER_KINDS)
def test_three_class_blobs(kind):
    X, y = blobs3()
    clf = make_classifier(kind, seed=0)
    clf.fit(X, y)
    acc = (clf.predict(X) == y).mean()
    assert acc >= 0.95, kind


@pytest.mark.parametrize("kind", ["decision_tree", "random_forest"])
def test_trees_memorize_training_data(kind):
    rng = np.random.default_rng(4)
    X = rng.normal(size=(60, 5))
    y = rng.integers(0, 3, size=60)
    clf = make_classifier(kind, seed=0)
    clf.fit(X, y)
    if kind == "decision_tree":
        assert (clf.predict(X) == y).all()
    else:
        # bootstrap forests memorize nearly but not exactly
        assert (clf.predict(X) == y).mean() >= 0.9


@pytest.mark.parametrize("kind", CLASSIFIER_KINDS)
def test_deterministic_given_seed(kind):
    X, y = blobs3(seed=2, gap=3.0)
    p1 = make_classifier(kind, seed=7).fit(X, y).predict(X)
    p2 = make_classifier(kind, seed=7).fit(X, y).predict(X)
    np.testing.assert_array_equal(p1, p2)


@pytest.mark.parametrize("kind", CLASSIFIER_KINDS)
def test_predict_returns_training_label_values(kind):
    # labels that are not 0..k-1 must round-trip unchanged
    X, y = separable(seed=5, n=60)
    y = np.where(y == 0, 3, 7)
    clf = make_classifier(kind, seed=0)
    clf.fit(X, y)
    assert set(np.unique(clf.predict(X))) <= {3, 7}


def test_shuffled_labels_mean_accuracy_near_chance():
    accs = []
    for seed in range(20):
        rng = np.random.default_rng(seed)
        X = rng.normal(size=(80, 6))
        y = rng.permutation(np.repeat([0, 1], 40))
        report = evaluate_arrays(
            X, y, EvaluationProtocol(folds=5, seed=seed)
        )
        accs.append(report.acc_avg)
    mean = float(np.mean(accs))
    # 3 sigma of the mean of 20 runs of 80 bernoulli trials
    sigma = 0.5 / np.sqrt(80 * 20)
    assert abs(mean - 0.5) < 3 * 3 * sigma  # generous: classifiers correlate


def test_hyperparams_are_pinned():
    assert DEFAULT_HYPERPARAMS["logistic_regression"]["l2"] == 1e-4
    assert DEFAULT_HYPERPARAMS["random_forest"]["n_trees"] == 100
    with pytest.raises(ValueError):
        make_classifier("mystery")


def test_get_params_roundtrip():
    clf = make_classifier("random_forest", seed=3)
    params = clf.get_params()
    assert params["n_trees"] == 100
    clone = type(clf)(**params)
    assert clone.get_params() == params
