"""Per-feature group contrasts.

Each contrast first gates on normality (D'Agostino K-squared, alpha =
0.05, every group must pass); normal data gets one-way ANOVA, anything
else the Kruskal-Wallis rank test with tie correction.  The rank test's
statistic is reported as H (it has no F, despite occasional informal
naming).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import stats as sps

from .errors import GroupTooSmall
from .features.extractor import FeatureMatrix
from .groupings import GroupingSpec

NORMALITY_ALPHA = 0.05
# D'Agostino's test needs a minimum sample size; smaller groups skip the
# gate and fall through to the rank test.
NORMALITY_MIN_N = 8

TEST_ANOVA = "ANOVA"
TEST_KRUSKAL = "KruskalWallis"


@dataclass(frozen=True)
class GroupSummary:
    name: str
    n: int
    mean: float
    median: float
    std: float


@dataclass(frozen=True)
class ContrastResult:
    feature: str
    groups: tuple[GroupSummary, ...]
    test: str
    statistic: float
    p_value: float

    def to_json(self) -> dict:
        return {
            "feature": self.feature,
            "test": self.test,
            "statistic": self.statistic,
            "p": self.p_value,
            "groups": [
                {
                    "name": g.name,
                    "n": g.n,
                    "mean": g.mean,
                    "median": g.median,
                    "std": g.std,
                }
                for g in self.groups
            ],
        }


def anova_oneway(groups: list[np.ndarray]) -> tuple[float, float]:
    """One-way fixed-effects F test."""
    k = len(groups)
    ns = np.array([len(g) for g in groups])
    n = ns.sum()
    means = np.array([g.mean() for g in groups])
    grand = np.concatenate(groups).mean()
    ss_between = float((ns * (means - grand) ** 2).sum())
    ss_within = float(sum(((g - m) ** 2).sum() for g, m in zip(groups, means)))
    df_between = k - 1
    df_within = n - k
    if ss_within == 0.0:
        if ss_between == 0.0:
            return 0.0, 1.0
        return float("inf"), 0.0
    f = (ss_between / df_between) / (ss_within / df_within)
    return f, float(sps.f.sf(f, df_between, df_within))


def kruskal_wallis(groups: list[np.ndarray]) -> tuple[float, float]:
    """Kruskal-Wallis H with average ranks for ties and tie correction."""
    k = len(groups)
    pooled = np.concatenate(groups)
    n = len(pooled)
    ranks = sps.rankdata(pooled)  # average ranks on ties
    h = 0.0
    start = 0
    for g in groups:
        r = ranks[start : start + len(g)]
        h += r.sum() ** 2 / len(g)
        start += len(g)
    h = 12.0 / (n * (n + 1)) * h - 3 * (n + 1)
    _, counts = np.unique(pooled, return_counts=True)
    tie_term = float(((counts**3 - counts).sum()))
    correction = 1.0 - tie_term / (n**3 - n)
    if correction == 0.0:
        return 0.0, 1.0  # every observation tied: no evidence of contrast
    h /= correction
    h = max(h, 0.0)
    return float(h), float(sps.chi2.sf(h, k - 1))


def normality_gate(groups: list[np.ndarray], alpha: float = NORMALITY_ALPHA) -> bool:
    for g in groups:
        if len(g) < NORMALITY_MIN_N:
            return False
        if np.all(g == g[0]):
            return False
        _, p = sps.normaltest(g)
        if p < alpha:
            return False
    return True


def contrast_groups(feature: str, named_groups: list[tuple[str, np.ndarray]]) -> ContrastResult:
    if len(named_groups) < 2:
        raise GroupTooSmall("need at least 2 groups to contrast")
    for name, g in named_groups:
        if len(g) < 3:
            raise GroupTooSmall(f"group {name!r} has {len(g)} < 3 docs")
    arrays = [np.asarray(g, dtype=float) for _, g in named_groups]
    if normality_gate(arrays):
        test = TEST_ANOVA
        stat, p = anova_oneway(arrays)
    else:
        test = TEST_KRUSKAL
        stat, p = kruskal_wallis(arrays)
    return ContrastResult(
        feature=feature,
        groups=tuple(
            GroupSummary(
                name,
                len(g),
                float(g.mean()),
                float(np.median(g)),
                float(g.std()),
            )
            for (name, _), g in zip(named_groups, arrays)
        ),
        test=test,
        statistic=stat,
        p_value=p,
    )


def contrast_feature(
    matrix: FeatureMatrix, feature: str, grouping: GroupingSpec
) -> ContrastResult:
    col = matrix.values[:, matrix.feature_names.index(feature)]
    by_class: dict[str, list[float]] = {}
    for value, group in zip(col, matrix.groups):
        cls = grouping.assign(group)
        if cls is not None:
            by_class.setdefault(cls, []).append(float(value))
    named = [(name, np.array(vals)) for name, vals in sorted(by_class.items())]
    return contrast_groups(feature, named)
