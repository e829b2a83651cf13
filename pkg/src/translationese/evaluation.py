"""Classifier evaluation: stratified cross-validation, the five-classifier
ensemble, averaged metrics, and the pairwise engine heatmap.

The reported ACC_avg / F1_avg are plain arithmetic means over the five
per-classifier scores; C/T (correct / total) aggregates over the test
folds, so every document is scored exactly once per classifier.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .base import check_X_y, encode_labels
from .classifiers import CLASSIFIER_KINDS, NEEDS_STANDARDIZATION, make_classifier
from .errors import FoldTooSmall, GroupEmpty, MissingClassInTrain, TooFewDocs
from .features.extractor import FeatureMatrix
from .groupings import GroupingSpec, engine_code
from .selection import chi2_rank, select_top_k


@dataclass(frozen=True)
class EvaluationProtocol:
    folds: int = 5
    seed: int = 0
    standardize: bool = True  # per-fold z-scoring for scale-sensitive kinds


@dataclass(frozen=True)
class ClassifierScore:
    kind: str
    acc: float
    f1_macro: float
    correct: int
    total: int
    confusion: np.ndarray = field(compare=False)  # true x predicted


@dataclass(frozen=True)
class ClassificationReport:
    grouping: str
    classes: tuple[str, ...]
    per_classifier: tuple[ClassifierScore, ...]
    acc_avg: float
    f1_avg: float
    protocol: EvaluationProtocol

    def to_json(self) -> dict:
        return {
            "grouping": self.grouping,
            "classes": list(self.classes),
            "per_classifier": [
                {
                    "kind": s.kind,
                    "acc": s.acc,
                    "f1_macro": s.f1_macro,
                    "correct": s.correct,
                    "total": s.total,
                    "confusion": s.confusion.tolist(),
                }
                for s in self.per_classifier
            ],
            "acc_avg": self.acc_avg,
            "f1_avg": self.f1_avg,
            "protocol": {
                "folds": self.protocol.folds,
                "seed": self.protocol.seed,
                "standardize": self.protocol.standardize,
            },
        }


def stratified_folds(codes: np.ndarray, n_folds: int, seed: int) -> np.ndarray:
    """Fold id per document; every class is dealt round-robin after a
    seeded shuffle, so folds partition the documents and are stratified."""
    if n_folds < 2:
        raise FoldTooSmall("need at least 2 folds")
    rng = np.random.default_rng(seed)
    fold_of = np.empty(len(codes), dtype=int)
    for c in np.unique(codes):
        idx = np.nonzero(codes == c)[0]
        if len(idx) < n_folds:
            raise FoldTooSmall(
                f"class {c} has {len(idx)} docs, fewer than {n_folds} folds"
            )
        rng.shuffle(idx)
        fold_of[idx] = np.arange(len(idx)) % n_folds
    return fold_of


def zscore_fit(X: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    mean = X.mean(axis=0)
    std = X.std(axis=0)
    std[std == 0] = 1.0
    return mean, std


def fit_predict(kind: str, train_X, train_y, test_X, seed: int = 0,
                standardize: bool | None = None) -> np.ndarray:
    """Train one classifier kind and predict labels for the test split.

    z-scoring (when applicable for the kind) is fitted on the train split
    only.
    """
    train_X, train_y = check_X_y(train_X, train_y)
    if standardize is None:
        standardize = kind in NEEDS_STANDARDIZATION
    if standardize:
        mean, std = zscore_fit(train_X)
        train_X = (train_X - mean) / std
        test_X = (np.asarray(test_X, dtype=float) - mean) / std
    clf = make_classifier(kind, seed=seed)
    clf.fit(train_X, train_y)
    return clf.predict(test_X)


def macro_f1(confusion: np.ndarray) -> float:
    f1s = []
    for c in range(confusion.shape[0]):
        tp = confusion[c, c]
        fp = confusion[:, c].sum() - tp
        fn = confusion[c, :].sum() - tp
        denom = 2 * tp + fp + fn
        f1s.append(2 * tp / denom if denom > 0 else 0.0)
    return float(np.mean(f1s))


def assign_classes(matrix: FeatureMatrix, grouping: GroupingSpec):
    """(mask, class names per kept doc) for a grouping over the matrix."""
    raw = [grouping.assign(g) for g in matrix.groups]
    mask = np.array([r is not None for r in raw])
    y = np.array([r for r in raw if r is not None], dtype=object)
    if mask.sum() == 0 or len(set(y)) < 2:
        raise GroupEmpty(grouping.name)
    return mask, y


def evaluate_arrays(
    X: np.ndarray,
    y,
    protocol: EvaluationProtocol,
    grouping_name: str = "custom",
    kinds: tuple[str, ...] = CLASSIFIER_KINDS,
) -> ClassificationReport:
    X, y = check_X_y(X, y)
    codes, classes = encode_labels(y)
    if len(classes) < 2:
        raise TooFewDocs("evaluation needs at least 2 classes")
    fold_of = stratified_folds(codes, protocol.folds, protocol.seed)

    scores = []
    for kind in kinds:
        confusion = np.zeros((len(classes), len(classes)), dtype=int)
        for fold in range(protocol.folds):
            test = fold_of == fold
            train = ~test
            if len(np.unique(codes[train])) < len(classes):
                raise MissingClassInTrain(
                    f"fold {fold} train split is missing a class"
                )
            pred = fit_predict(
                kind,
                X[train],
                codes[train],
                X[test],
                seed=protocol.seed,
                standardize=(kind in NEEDS_STANDARDIZATION and protocol.standardize),
            )
            np.add.at(confusion, (codes[test], pred.astype(int)), 1)
        correct = int(np.trace(confusion))
        total = int(confusion.sum())
        scores.append(
            ClassifierScore(
                kind=kind,
                acc=correct / total,
                f1_macro=macro_f1(confusion),
                correct=correct,
                total=total,
                confusion=confusion,
            )
        )

    return ClassificationReport(
        grouping=grouping_name,
        classes=tuple(str(c) for c in classes),
        per_classifier=tuple(scores),
        acc_avg=float(np.mean([s.acc for s in scores])),
        f1_avg=float(np.mean([s.f1_macro for s in scores])),
        protocol=protocol,
    )


def evaluate_group(
    matrix: FeatureMatrix,
    grouping: GroupingSpec,
    protocol: EvaluationProtocol,
    feature_names=None,
) -> ClassificationReport:
    """Run the five-classifier ensemble over identical folds for a
    comparison group, optionally restricted to selected features."""
    mask, y = assign_classes(matrix, grouping)
    sub = matrix.select_docs(mask)
    if feature_names is not None:
        sub = sub.select_features(feature_names)
    return evaluate_arrays(sub.values, y, protocol, grouping_name=grouping.name)


@dataclass(frozen=True)
class HeatmapGrid:
    codes: tuple[str, ...]
    acc: np.ndarray  # symmetric, NaN diagonal

    def to_json(self) -> dict:
        return {
            "codes": list(self.codes),
            "acc": [
                [None if np.isnan(v) else float(v) for v in row]
                for row in self.acc
            ],
        }


def pairwise_heatmap(
    matrix: FeatureMatrix,
    protocol: EvaluationProtocol,
    top_k: int = 30,
    bins: int = 10,
) -> HeatmapGrid:
    """Averaged pairwise ACC for every unordered engine pair, with a fresh
    chi-square top-k selection per pair."""
    code_of = [engine_code(g) for g in matrix.groups]
    codes = tuple(sorted({c for c in code_of if c is not None}))
    if len(codes) < 2:
        raise TooFewDocs("pairwise heatmap needs at least 2 engine codes")
    grid = np.full((len(codes), len(codes)), np.nan)
    for i, a in enumerate(codes):
        for j in range(i + 1, len(codes)):
            b = codes[j]
            mask = np.array([c in (a, b) for c in code_of])
            sub = matrix.select_docs(mask)
            y = np.array([c for c in code_of if c in (a, b)], dtype=object)
            selection = select_top_k(chi2_rank(sub, y, bins=bins), top_k)
            sub = sub.select_features(selection.retained)
            report = evaluate_arrays(
                sub.values, y, protocol, grouping_name=f"{a}-vs-{b}"
            )
            grid[i, j] = grid[j, i] = report.acc_avg
    return HeatmapGrid(codes, grid)
