import math

import numpy as np
import pytest

from helpers import TAGSET, one_doc_corpus, sent
from translationese.features.lexical import (
    ADVERSATIVE_CONJ,
    extract_lexical,
    mtld,
    sttr,
    ttr,
)


def mtld_oracle(tokens, threshold=0.72):
    """Segment-walking reimplementation used as an independent check."""

    def one_direction(seq):
        factors = 0.0
        start = 0
        while start < len(seq):
            seen = set()
            pos = start
            while pos < len(seq):
                seen.add(seq[pos])
                pos += 1
                if len(seen) / (pos - start) < threshold:
                    factors += 1.0
                    start = pos
                    break
            else:
                # ran off the end inside a factor
                final_ttr = len(seen) / (pos - start)
                factors += (1.0 - final_ttr) / (1.0 - threshold)
                start = pos
        return len(seq) / factors if factors > 0 else float(len(seq))

    fwd = one_direction(list(tokens))
    bwd = one_direction(list(reversed(tokens)))
    return (fwd + bwd) / 2.0


def test_mtld_hand_worked():
    # a b c a b c a b c a: each direction completes exactly two factors
    # (ttr drops below 0.72 at the 5th token of each), so 10/2 = 5.
    seq = list("abcabcabca")
    assert mtld(seq) == pytest.approx(5.0, abs=1e-12)

    # a b a b: one full factor then a 1-token remainder with ttr 1.0,
    # which contributes 0 partial weight; 4/1 = 4 both ways.
    assert mtld(list("abab")) == pytest.approx(4.0, abs=1e-12)


def test_mtld_all_distinct_falls_back_to_token_count():
    assert mtld(list("abcd")) == 4.0
    assert mtld(["只"]) == 1.0
    assert mtld([]) == 0.0


def test_mtld_matches_oracle_on_random_sequences():
    rng = np.random.default_rng(3)
    for _ in range(200):
        n = int(rng.integers(1, 120))
        vocab = int(rng.integers(1, 30))
        seq = [str(rng.integers(0, vocab)) for _ in range(n)]
        assert mtld(seq) == pytest.approx(mtld_oracle(seq), abs=1e-9)


def test_ttr_sttr():
    assert ttr(list("aabb")) == 0.5
    assert ttr([]) == 0.0
    # two full windows of 5, remainder dropped
    seq = list("abcde") + list("aaaaa") + list("xy")
    assert sttr(seq, window=5) == pytest.approx((1.0 + 0.2) / 2)
    # shorter than one window: plain ttr
    assert sttr(list("aab"), window=5) == pytest.approx(2 / 3)


def test_diversity_hand_worked():
    doc = one_doc_corpus(
        [sent(("甲", "n", 0, "HED"), ("甲", "n", 1, "COO"),
              ("乙乙", "v", 1, "VOB"), ("丙丙丙", "a", 1, "ATT"))]
    ).documents[0]
    out = extract_lexical(doc, TAGSET)
    # spectrum: one type twice, two types once
    assert out["ttr"] == pytest.approx(3 / 4)
    assert out["hapax_ratio"] == pytest.approx(2 / 3)
    assert out["dislegomena_ratio"] == pytest.approx(1 / 3)
    assert out["yule_k"] == pytest.approx(1e4 * (6 - 4) / 16)
    assert out["simpson_d"] == pytest.approx(2 / 12)
    assert out["herdan_c"] == pytest.approx(math.log(3) / math.log(4))
    assert out["guiraud_r"] == pytest.approx(3 / 2)
    assert out["word_entropy"] == pytest.approx(1.5)
    assert out["avg_word_length"] == pytest.approx((1 + 1 + 2 + 3) / 4)
    assert out["single_char_word_ratio"] == pytest.approx(2 / 4)
    assert out["long_word_ratio"] == pytest.approx(1 / 4)
    # n, v, a are all content tags
    assert out["lexical_density"] == 1.0


def test_postag_ratios_sum_to_one():
    doc = one_doc_corpus(
        [sent(("我", "r", 0, "HED"), ("爱", "v", 1, "VOB"),
              ("中国", "ns", 2, "VOB"), ("。", "wp", 2, "WP"))]
    ).documents[0]
    out = extract_lexical(doc, TAGSET)
    total = sum(v for k, v in out.items() if k.startswith("postag_"))
    assert total == pytest.approx(1.0, abs=1e-12)
    assert out["postag_r"] == 0.25
    assert out["postag_wp"] == 0.25


def test_conj_and_pronoun_ratios():
    doc = one_doc_corpus(
        [sent(("但是", "c", 0, "HED"), ("我们", "r", 1, "SBV"),
              ("和", "c", 1, "LAD"), ("他", "r", 1, "VOB"))]
    ).documents[0]
    out = extract_lexical(doc, TAGSET)
    assert "但是" in ADVERSATIVE_CONJ
    assert out["ratio_advrstvConj"] == 0.25
    assert out["ratio_paraConj"] == 0.25  # 和
    assert out["ratio_causalConj"] == 0.0
    assert out["ratio_1stPron_plural"] == 0.25
    assert out["ratio_3rdPron_singular"] == 0.25
    assert out["ratio_1stPron_singular"] == 0.0


def test_punct_subtype_ratios():
    doc = one_doc_corpus(
        [
            sent(("好", "a", 0, "HED"), ("，", "wp", 1, "WP"),
                 ("（", "wp", 1, "WP"), ("）", "wp", 1, "WP"),
                 ("。", "wp", 1, "WP")),
            sent(("走", "v", 0, "HED"), ("！", "wp", 1, "WP")),
        ]
    ).documents[0]
    out = extract_lexical(doc, TAGSET)
    # 5 punct tokens of 7 total
    assert out["ratio_punct"] == pytest.approx(5 / 7)
    assert out["ratio_bracket"] == pytest.approx(2 / 5)
    assert out["ratio_comma"] == pytest.approx(1 / 5)
    assert out["ratio_period"] == pytest.approx(1 / 5)
    assert out["ratio_exclaim"] == pytest.approx(1 / 5)
    # terminal marks: one period + one exclaim
    assert out["ratio_spmark"] == pytest.approx(2 / 5)
    assert out["ratio_latinPunct"] == 0.0


def test_no_punct_doc_has_zero_subtype_ratios():
    doc = one_doc_corpus([sent(("好", "a", 0, "HED"))]).documents[0]
    out = extract_lexical(doc, TAGSET)
    assert out["ratio_punct"] == 0.0
    assert out["ratio_bracket"] == 0.0
