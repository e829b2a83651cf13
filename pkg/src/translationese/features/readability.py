"""Readability layer.

The nine readability metrics sit behind a per-metric plugin contract
(``fn(doc, freq_lexicon, conc_lexicon) -> float``).  The default
implementations are frequency-band and dispersion statistics; swap in
alternatives via :data:`READABILITY_PLUGINS` if you have a dedicated
readability tool.  Out-of-lexicon tokens are excluded from means; a
document with zero lexicon coverage gets the documented neutral value
(the lexicon's global mean for mean-type metrics, 0 for ratios and
spreads) and a logged warning.
"""

from __future__ import annotations

import logging
import math
import statistics
from typing import Callable

from ..corpus import Document
from ..resources import LexiconResource
from .inventory import CONCRETENESS_METRICS, READABILITY_METRICS

log = logging.getLogger(__name__)

NOUN_TAGS = frozenset({"n", "nd", "nh", "ni", "nl", "ns", "nt", "nz"})
VERB_TAGS = frozenset({"v"})
CONJ_TAGS = frozenset({"c"})

# Concreteness band thresholds (typical 1..5 rating scale).
HIGH_CONCRETENESS = 4.0
LOW_CONCRETENESS = 2.0

# Fraction of the lexicon score range counted as the "rare" band.
RARE_BAND_QUANTILE = 0.2


def lexicon_coverage(doc: Document, lexicon: LexiconResource) -> float:
    tokens = [t.surface for t in doc.tokens]
    return sum(1 for s in tokens if s in lexicon) / len(tokens)


def _lexicon_mean(lexicon: LexiconResource) -> float:
    return sum(lexicon.entries.values()) / len(lexicon)


def _mean_score(surfaces, lexicon: LexiconResource) -> float:
    scores = [lexicon[s] for s in surfaces if s in lexicon]
    if not scores:
        return _lexicon_mean(lexicon)
    return sum(scores) / len(scores)


def _oov_ratio(surfaces, lexicon: LexiconResource) -> float:
    surfaces = list(surfaces)
    if not surfaces:
        return 0.0
    return sum(1 for s in surfaces if s not in lexicon) / len(surfaces)


def _rare_threshold(lexicon: LexiconResource) -> float:
    scores = sorted(lexicon.entries.values())
    idx = int(RARE_BAND_QUANTILE * (len(scores) - 1))
    return scores[idx]


def _avg_word_frequency(doc, freq, conc):
    return _mean_score((t.surface for t in doc.tokens), freq)


def _lexical_richness(doc, freq, conc):
    # Rare-word ratio: covered tokens inside the bottom frequency band.
    cut = _rare_threshold(freq)
    covered = [freq[t.surface] for t in doc.tokens if t.surface in freq]
    if not covered:
        return 0.0
    return sum(1 for s in covered if s <= cut) / len(covered)


def _syntactic_richness(doc, freq, conc):
    # Dispersion of sentence lengths (coefficient of variation).
    lengths = [len(s) for s in doc.sentences]
    mean = sum(lengths) / len(lengths)
    if mean == 0:
        return 0.0
    var = sum((l - mean) ** 2 for l in lengths) / len(lengths)
    return math.sqrt(var) / mean


def _tagged(doc, tags):
    return [t.surface for t in doc.tokens if t.pos in tags]


READABILITY_PLUGINS: dict[str, Callable] = {
    "avg_word_frequency": _avg_word_frequency,
    "lexical_richness": _lexical_richness,
    "syntactic_richness": _syntactic_richness,
    "semantic_noise_n": lambda doc, freq, conc: _oov_ratio(_tagged(doc, NOUN_TAGS), freq),
    "semantic_noise_v": lambda doc, freq, conc: _oov_ratio(_tagged(doc, VERB_TAGS), freq),
    "semantic_accuracy_n": lambda doc, freq, conc: _mean_score(_tagged(doc, NOUN_TAGS), freq),
    "semantic_accuracy_v": lambda doc, freq, conc: _mean_score(_tagged(doc, VERB_TAGS), freq),
    "semantic_accuracy_c": lambda doc, freq, conc: _mean_score(_tagged(doc, CONJ_TAGS), freq),
    "semantic_accuracy_n_v": lambda doc, freq, conc: _mean_score(
        _tagged(doc, NOUN_TAGS | VERB_TAGS), freq
    ),
}

assert set(READABILITY_PLUGINS) == set(READABILITY_METRICS)


def extract_readability(
    doc: Document, freq: LexiconResource, conc: LexiconResource
) -> dict[str, float]:
    if lexicon_coverage(doc, freq) == 0.0:
        log.warning(
            "doc %r: no token found in the frequency lexicon; "
            "mean-type metrics fall back to the lexicon mean",
            doc.doc_id,
        )

    out = {
        name: float(READABILITY_PLUGINS[name](doc, freq, conc))
        for name in READABILITY_METRICS
    }

    scores = [conc[t.surface] for t in doc.tokens if t.surface in conc]
    if scores:
        mean = sum(scores) / len(scores)
        out["average_concreteness"] = mean
        out["concrete_std"] = statistics.pstdev(scores)
        out["high_ratio"] = sum(1 for s in scores if s >= HIGH_CONCRETENESS) / len(scores)
        out["low_ratio"] = sum(1 for s in scores if s <= LOW_CONCRETENESS) / len(scores)
    else:
        log.warning(
            "doc %r: no token found in the concreteness lexicon; "
            "using neutral values",
            doc.doc_id,
        )
        out["average_concreteness"] = _lexicon_mean(conc)
        out["concrete_std"] = 0.0
        out["high_ratio"] = 0.0
        out["low_ratio"] = 0.0

    assert set(out) == set(READABILITY_METRICS) | set(CONCRETENESS_METRICS)
    return out
