"""The feature-name registry.

Five layers, ratio-normalized throughout.  Under the default 29-tag /
17-relation tagset and the default n-gram sizes (10 + 49 + 60) the
inventory holds exactly 236 features:

=============  ==============================  =====
layer          sub level                       count
=============  ==============================  =====
lexical        general                            14
lexical        PoS-tag based                      58
syntactical    general                            10
syntactical    dep-relation based                 17
readability    readability metrics                 9
readability    concreteness metrics                4
translatability                                    5
npos           1/2/3-gram rel. frequencies       119
=============  ==============================  =====
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..corpus import Tagset
from ..errors import DataError

LAYER_LEXICAL = "lexical"
LAYER_SYNTACTICAL = "syntactical"
LAYER_READABILITY = "readability"
LAYER_TRANSLATABILITY = "translatability"
LAYER_NPOS = "npos"

LAYERS = (
    LAYER_LEXICAL,
    LAYER_SYNTACTICAL,
    LAYER_READABILITY,
    LAYER_TRANSLATABILITY,
    LAYER_NPOS,
)

GENERAL_LEXICAL = (
    "ttr",
    "sttr",
    "mtld",
    "avg_word_length",
    "hapax_ratio",
    "dislegomena_ratio",
    "yule_k",
    "simpson_d",
    "herdan_c",
    "guiraud_r",
    "word_entropy",
    "single_char_word_ratio",
    "long_word_ratio",
    "lexical_density",
)

CONJ_RATIO_FEATURES = (
    "ratio_advrstvConj",
    "ratio_causalConj",
    "ratio_paraConj",
    "ratio_sequnConj",
)

PRONOUN_RATIO_FEATURES = (
    "ratio_1stPron_singular",
    "ratio_1stPron_plural",
    "ratio_2ndPron_singular",
    "ratio_2ndPron_plural",
    "ratio_3rdPron_singular",
    "ratio_3rdPron_plural",
    "ratio_thisPron_singular",
    "ratio_thisPron_plural",
    "ratio_thatPron_singular",
    "ratio_thatPron_plural",
)

PUNCT_RATIO_FEATURES = (
    "ratio_period",
    "ratio_comma",
    "ratio_enumComma",
    "ratio_question",
    "ratio_exclaim",
    "ratio_colon",
    "ratio_semicolon",
    "ratio_bracket",
    "ratio_quote",
    "ratio_bookTitle",
    "ratio_dash",
    "ratio_ellipsis",
    "ratio_spmark",
    "ratio_punct",
    "ratio_latinPunct",
)

GENERAL_SYNTACTICAL = (
    "words_per_sentence",
    "chars_per_sentence",
    "sentence_length_std",
    "question_ratio",
    "exclaim_ratio",
    "mean_dependency_distance",
    "avg_children_per_node",
    "mean_tree_depth",
    "leaf_node_ratio",
    "left_branching_ratio",
)

READABILITY_METRICS = (
    "avg_word_frequency",
    "lexical_richness",
    "syntactic_richness",
    "semantic_noise_n",
    "semantic_noise_v",
    "semantic_accuracy_n",
    "semantic_accuracy_v",
    "semantic_accuracy_c",
    "semantic_accuracy_n_v",
)

CONCRETENESS_METRICS = (
    "average_concreteness",
    "concrete_std",
    "high_ratio",
    "low_ratio",
)

TRANSLATABILITY_FEATURES = (
    "completeness",
    "foreignness",
    "code_switching",
    "abbreviation",
    "untranslated",
)

DEFAULT_NPOS_SIZES = {1: 10, 2: 49, 3: 60}


def postag_feature(tag: str) -> str:
    return f"postag_{tag}"


def deprel_feature(rel: str) -> str:
    return f"deprel_{rel}"


def npos_feature(tags: tuple[str, ...]) -> str:
    return f"pos_{len(tags)}gram_{' '.join(tags)}"


@dataclass(frozen=True)
class FeatureMeta:
    layer: str
    sublayer: str


@dataclass(frozen=True)
class FeatureInventory:
    """Ordered feature names plus per-feature layer metadata."""

    names: tuple[str, ...]
    meta: dict[str, FeatureMeta] = field(compare=False)

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise DataError("feature names must be unique across layers")

    def __len__(self):
        return len(self.names)

    def layer_names(self, layer: str) -> tuple[str, ...]:
        return tuple(n for n in self.names if self.meta[n].layer == layer)

    def layer_counts(self) -> dict[str, int]:
        counts = {layer: 0 for layer in LAYERS}
        for n in self.names:
            counts[self.meta[n].layer] += 1
        return counts


def build_inventory(tagset: Tagset, npos_names: tuple[str, ...]) -> FeatureInventory:
    """Assemble the full inventory for a tagset and a finalized n-gram list."""
    names: list[str] = []
    meta: dict[str, FeatureMeta] = {}

    def add(group: tuple[str, ...] | list[str], layer: str, sublayer: str):
        for name in group:
            names.append(name)
            meta[name] = FeatureMeta(layer, sublayer)

    add(GENERAL_LEXICAL, LAYER_LEXICAL, "general")
    add([postag_feature(t) for t in sorted(tagset.pos)], LAYER_LEXICAL, "postag")
    add(CONJ_RATIO_FEATURES, LAYER_LEXICAL, "postag")
    add(PRONOUN_RATIO_FEATURES, LAYER_LEXICAL, "postag")
    add(PUNCT_RATIO_FEATURES, LAYER_LEXICAL, "postag")
    add(GENERAL_SYNTACTICAL, LAYER_SYNTACTICAL, "general")
    add([deprel_feature(r) for r in sorted(tagset.dep)], LAYER_SYNTACTICAL, "deptag")
    add(READABILITY_METRICS, LAYER_READABILITY, "readability")
    add(CONCRETENESS_METRICS, LAYER_READABILITY, "concreteness")
    add(TRANSLATABILITY_FEATURES, LAYER_TRANSLATABILITY, "translatability")
    add(npos_names, LAYER_NPOS, "npos")

    return FeatureInventory(tuple(names), meta)
