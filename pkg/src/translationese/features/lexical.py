"""Lexical layer: diversity measures plus PoS-tag and word-class ratios."""

from __future__ import annotations

import math
from collections import Counter
from typing import Sequence

from ..corpus import (
    BRACKET_CHARS,
    Document,
    Tagset,
    Token,
)
from .inventory import (
    CONJ_RATIO_FEATURES,
    PRONOUN_RATIO_FEATURES,
    PUNCT_RATIO_FEATURES,
    postag_feature,
)

DEFAULT_STTR_WINDOW = 1000
DEFAULT_MTLD_THRESHOLD = 0.72

# Tags counted as content words for lexical density.
CONTENT_TAGS = frozenset(
    {"a", "b", "d", "i", "j", "n", "nd", "nh", "ni", "nl", "ns", "nt", "nz", "v", "z"}
)

ADVERSATIVE_CONJ = frozenset({"但是", "但", "然而", "可是", "不过", "却"})
CAUSAL_CONJ = frozenset({"因为", "由于", "所以", "因此", "因而", "故"})
PARATACTIC_CONJ = frozenset({"和", "与", "及", "以及", "并且", "而且", "并"})
SEQUENTIAL_CONJ = frozenset({"首先", "其次", "然后", "接着", "随后", "于是", "最后"})

PRONOUN_CLASSES = {
    "ratio_1stPron_singular": frozenset({"我"}),
    "ratio_1stPron_plural": frozenset({"我们", "咱们"}),
    "ratio_2ndPron_singular": frozenset({"你", "您"}),
    "ratio_2ndPron_plural": frozenset({"你们"}),
    "ratio_3rdPron_singular": frozenset({"他", "她", "它"}),
    "ratio_3rdPron_plural": frozenset({"他们", "她们", "它们"}),
    "ratio_thisPron_singular": frozenset({"这"}),
    "ratio_thisPron_plural": frozenset({"这些"}),
    "ratio_thatPron_singular": frozenset({"那"}),
    "ratio_thatPron_plural": frozenset({"那些"}),
}

_QUOTE_CHARS = set("\"'“”‘’「」『』")
_BOOK_TITLE_CHARS = set("《》〈〉")
_DASH_CHARS = set("—－-–")
_TERMINAL = {"period", "question", "exclaim", "ellipsis"}


def _punct_subtype(surface: str) -> str | None:
    """Coarse class of a punctuation token, by its characters."""
    if "…" in surface or surface in {"...", "......"}:
        return "ellipsis"
    if surface in {"。", "."}:
        return "period"
    if surface in {"，", ","}:
        return "comma"
    if surface == "、":
        return "enumComma"
    if surface in {"？", "?"}:
        return "question"
    if surface in {"！", "!"}:
        return "exclaim"
    if surface in {"：", ":"}:
        return "colon"
    if surface in {"；", ";"}:
        return "semicolon"
    if all(c in BRACKET_CHARS for c in surface):
        return "bracket"
    if all(c in _QUOTE_CHARS for c in surface):
        return "quote"
    if all(c in _BOOK_TITLE_CHARS for c in surface):
        return "bookTitle"
    if all(c in _DASH_CHARS for c in surface):
        return "dash"
    return None


def ttr(surfaces: Sequence[str]) -> float:
    if not surfaces:
        return 0.0
    return len(set(surfaces)) / len(surfaces)


def sttr(surfaces: Sequence[str], window: int = DEFAULT_STTR_WINDOW) -> float:
    """Mean TTR over complete fixed-size windows; the trailing partial
    window is dropped.  Texts shorter than one window fall back to TTR."""
    n = len(surfaces)
    if n < window:
        return ttr(surfaces)
    values = [
        ttr(surfaces[i : i + window]) for i in range(0, n - window + 1, window)
    ]
    return sum(values) / len(values)


def _mtld_pass(surfaces: Sequence[str], threshold: float) -> float:
    """Factor count in one direction, including the final partial factor."""
    factors = 0.0
    seen: set[str] = set()
    count = 0
    for s in surfaces:
        count += 1
        seen.add(s)
        if len(seen) / count < threshold:
            factors += 1.0
            seen.clear()
            count = 0
    if count > 0:
        end_ttr = len(seen) / count
        factors += (1.0 - end_ttr) / (1.0 - threshold)
    return factors


def mtld(surfaces: Sequence[str], threshold: float = DEFAULT_MTLD_THRESHOLD) -> float:
    """Mean of forward and backward factor-based diversity scores.

    A direction with zero factors (running TTR never fell below the
    threshold, e.g. all-distinct tokens) scores the token count.
    """
    if not surfaces:
        return 0.0
    scores = []
    for seq in (surfaces, list(reversed(surfaces))):
        factors = _mtld_pass(seq, threshold)
        scores.append(len(surfaces) / factors if factors > 0 else float(len(surfaces)))
    return (scores[0] + scores[1]) / 2.0


def _diversity_features(surfaces: Sequence[str], tokens: Sequence[Token]) -> dict:
    n = len(surfaces)
    freqs = Counter(surfaces)
    v = len(freqs)
    spectrum = Counter(freqs.values())  # occurrences m -> V(m)
    hapax = spectrum.get(1, 0)
    dis = spectrum.get(2, 0)
    yule_k = (
        1e4 * (sum(v_m * m * m for m, v_m in spectrum.items()) - n) / (n * n)
        if n > 0
        else 0.0
    )
    simpson = (
        sum(c * (c - 1) for c in freqs.values()) / (n * (n - 1)) if n > 1 else 0.0
    )
    herdan = math.log(v) / math.log(n) if n > 1 else 1.0
    entropy = -sum((c / n) * math.log2(c / n) for c in freqs.values()) if n else 0.0
    return {
        "ttr": ttr(surfaces),
        "sttr": sttr(surfaces),
        "mtld": mtld(surfaces),
        "avg_word_length": sum(t.char_count for t in tokens) / n if n else 0.0,
        "hapax_ratio": hapax / v if v else 0.0,
        "dislegomena_ratio": dis / v if v else 0.0,
        "yule_k": yule_k,
        "simpson_d": simpson,
        "herdan_c": herdan,
        "guiraud_r": v / math.sqrt(n) if n else 0.0,
        "word_entropy": entropy,
        "single_char_word_ratio": sum(1 for t in tokens if t.char_count == 1) / n,
        "long_word_ratio": sum(1 for t in tokens if t.char_count >= 3) / n,
        "lexical_density": sum(1 for t in tokens if t.pos in CONTENT_TAGS) / n,
    }


def extract_lexical(doc: Document, tagset: Tagset) -> dict[str, float]:
    tokens = list(doc.tokens)
    surfaces = [t.surface for t in tokens]
    n = len(tokens)

    out = _diversity_features(surfaces, tokens)

    pos_counts = Counter(t.pos for t in tokens)
    for tag in sorted(tagset.pos):
        out[postag_feature(tag)] = pos_counts.get(tag, 0) / n

    classes = {
        "ratio_advrstvConj": ADVERSATIVE_CONJ,
        "ratio_causalConj": CAUSAL_CONJ,
        "ratio_paraConj": PARATACTIC_CONJ,
        "ratio_sequnConj": SEQUENTIAL_CONJ,
        **PRONOUN_CLASSES,
    }
    for name in CONJ_RATIO_FEATURES + PRONOUN_RATIO_FEATURES:
        members = classes[name]
        out[name] = sum(1 for s in surfaces if s in members) / n

    # Punctuation subtype ratios are over punctuation tokens (the bracket
    # ratio definition: brackets / all punctuation marks); ratio_punct is
    # over all tokens.
    punct_tokens = [t for t in tokens if t.script == "Punct"]
    n_punct = len(punct_tokens)
    sub_counts: Counter = Counter()
    for t in punct_tokens:
        sub = _punct_subtype(t.surface)
        if sub is not None:
            sub_counts[sub] += 1
        if all(ord(c) < 128 for c in t.surface):
            sub_counts["latinPunct"] += 1
    sub_counts["spmark"] = sum(sub_counts.get(k, 0) for k in _TERMINAL)
    for name in PUNCT_RATIO_FEATURES:
        key = name[len("ratio_") :]
        if key == "punct":
            out[name] = n_punct / n
        else:
            out[name] = sub_counts.get(key, 0) / n_punct if n_punct else 0.0
    return out
