"""Toolkit for detecting and characterizing machine-translation style in
tagged Chinese corpora: five-layer feature extraction, chi-square feature
selection, an averaged five-classifier ensemble, k-means/ARI clustering,
and per-feature statistical contrasts."""

__version__ = "0.1.0"

from .cluster import KMeans, adjusted_rand_index, cluster_and_score
from .corpus import (
    Corpus,
    Document,
    GroupLabel,
    Sentence,
    Token,
    corpus_stats,
    load_tagset,
    parse_corpus,
    script_classify,
    serialize_corpus,
)
from .evaluation import (
    ClassificationReport,
    EvaluationProtocol,
    evaluate_group,
    fit_predict,
    pairwise_heatmap,
)
from .features import FeatureExtractor, FeatureMatrix, mtld, sttr, ttr
from .resources import LexiconResource, ReferenceProfile, load_lexicon
from .selection import Chi2Ranker, chi2_rank, select_top_k, shared_top_features
from .stats import contrast_feature

__all__ = [
    "Chi2Ranker",
    "ClassificationReport",
    "Corpus",
    "Document",
    "EvaluationProtocol",
    "FeatureExtractor",
    "FeatureMatrix",
    "GroupLabel",
    "KMeans",
    "LexiconResource",
    "ReferenceProfile",
    "Sentence",
    "Token",
    "adjusted_rand_index",
    "chi2_rank",
    "cluster_and_score",
    "contrast_feature",
    "corpus_stats",
    "evaluate_group",
    "fit_predict",
    "load_lexicon",
    "load_tagset",
    "mtld",
    "pairwise_heatmap",
    "parse_corpus",
    "script_classify",
    "select_top_k",
    "serialize_corpus",
    "shared_top_features",
    "sttr",
    "ttr",
]
