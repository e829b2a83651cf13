import pytest

from helpers import one_doc_corpus, sent
from translationese.features.readability import (
    extract_readability,
    lexicon_coverage,
)
from translationese.resources import LexiconResource

FREQ = LexiconResource(
    "Frequency",
    {"中国": 5.0, "爱": 3.0, "经济": 1.0, "发展": 2.0, "好": 4.0},
)
CONC = LexiconResource("Concreteness", {"中国": 4.5, "爱": 1.5, "好": 3.0})


def fixture_doc():
    return one_doc_corpus(
        [
            sent(
                ("我", "r", 2, "SBV"),
                ("爱", "v", 0, "HED"),
                ("中国", "ns", 2, "VOB"),
                ("经济", "n", 3, "ATT"),
                ("。", "wp", 2, "WP"),
            )
        ]
    ).documents[0]


def test_hand_worked_metrics():
    out = extract_readability(fixture_doc(), FREQ, CONC)
    # covered tokens: 爱 3.0, 中国 5.0, 经济 1.0
    assert out["avg_word_frequency"] == pytest.approx(3.0)
    # rare band cut = sorted scores [1..5] at index int(0.2*4) = 0 -> 1.0
    assert out["lexical_richness"] == pytest.approx(1 / 3)
    assert out["syntactic_richness"] == 0.0  # single sentence
    assert out["semantic_noise_n"] == 0.0  # both nouns covered
    assert out["semantic_noise_v"] == 0.0
    assert out["semantic_accuracy_n"] == pytest.approx((5.0 + 1.0) / 2)
    assert out["semantic_accuracy_v"] == pytest.approx(3.0)
    # no conjunction tokens -> lexicon global mean
    assert out["semantic_accuracy_c"] == pytest.approx(3.0)
    assert out["semantic_accuracy_n_v"] == pytest.approx((5 + 1 + 3) / 3)


def test_hand_worked_concreteness():
    out = extract_readability(fixture_doc(), FREQ, CONC)
    # concreteness coverage: 中国 4.5, 爱 1.5
    assert out["average_concreteness"] == pytest.approx(3.0)
    assert out["concrete_std"] == pytest.approx(1.5)
    assert out["high_ratio"] == pytest.approx(1 / 2)
    assert out["low_ratio"] == pytest.approx(1 / 2)


def test_syntactic_richness_is_length_cv():
    doc = one_doc_corpus(
        [
            sent(("好", "a", 0, "HED")),
            sent(("好", "a", 0, "HED"), ("好", "a", 1, "COO"),
                 ("好", "a", 1, "COO")),
        ]
    ).documents[0]
    out = extract_readability(doc, FREQ, CONC)
    # lengths 1 and 3: mean 2, population std 1 -> cv 0.5
    assert out["syntactic_richness"] == pytest.approx(0.5)


def test_zero_coverage_neutral_values(caplog):
    doc = one_doc_corpus(
        [sent(("甲甲", "n", 0, "HED"), ("乙乙", "v", 1, "VOB"))]
    ).documents[0]
    with caplog.at_level("WARNING"):
        out = extract_readability(doc, FREQ, CONC)
    assert lexicon_coverage(doc, FREQ) == 0.0
    assert out["avg_word_frequency"] == pytest.approx(3.0)  # lexicon mean
    assert out["lexical_richness"] == 0.0
    assert out["semantic_noise_n"] == 1.0  # the noun is out of lexicon
    assert out["average_concreteness"] == pytest.approx(3.0)
    assert out["concrete_std"] == 0.0
    assert out["high_ratio"] == 0.0
    assert out["low_ratio"] == 0.0
    assert any("lexicon" in r.message for r in caplog.records)
