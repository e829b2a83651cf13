import numpy as np
import pytest

from helpers import OCN, TAGSET, doc, nmt, sent
from translationese.corpus import Corpus
from translationese.errors import DataError, TagsetMismatch
from translationese.features.extractor import (
    FeatureExtractor,
    FeatureMatrix,
    layer_of,
)
from translationese.features.inventory import build_inventory
from translationese.features.posgrams import build_reference_profile
from translationese.resources import LexiconResource

FREQ = LexiconResource("Frequency", {"中国": 5.0, "好": 2.0})
CONC = LexiconResource("Concreteness", {"中国": 4.0, "好": 2.5})


def small_corpus():
    docs = (
        doc(
            "a",
            [
                sent(("中国", "ns", 0, "HED"), ("好", "a", 1, "CMP"),
                     ("。", "wp", 1, "WP")),
                sent(("人", "n", 0, "HED"), ("走", "v", 1, "COO")),
            ],
        ),
        doc(
            "b",
            [sent(("你", "r", 2, "SBV"), ("来", "v", 0, "HED"),
                  ("！", "wp", 2, "WP"))],
            nmt("ngx"),
        ),
    )
    return Corpus(docs, TAGSET.tagset_id)


def test_default_inventory_has_236_features():
    npos = tuple(f"pos_1gram_t{i}" for i in range(10)) + tuple(
        f"pos_2gram_a b{i}" for i in range(49)
    ) + tuple(f"pos_3gram_a b c{i}" for i in range(60))
    inv = build_inventory(TAGSET, npos)
    assert len(inv) == 236
    assert inv.layer_counts() == {
        "lexical": 72,
        "syntactical": 27,
        "readability": 13,
        "translatability": 5,
        "npos": 119,
    }


def test_layer_of_each_name():
    assert layer_of("mtld") == "lexical"
    assert layer_of("postag_n") == "lexical"
    assert layer_of("ratio_advrstvConj") == "lexical"
    assert layer_of("chars_per_sentence") == "syntactical"
    assert layer_of("deprel_SBV") == "syntactical"
    assert layer_of("avg_word_frequency") == "readability"
    assert layer_of("high_ratio") == "readability"
    assert layer_of("foreignness") == "translatability"
    assert layer_of("pos_2gram_n v") == "npos"
    with pytest.raises(DataError):
        layer_of("nonsense")


def test_fit_transform_shapes_and_order():
    corpus = small_corpus()
    profile = build_reference_profile(corpus)
    ex = FeatureExtractor(TAGSET, FREQ, CONC, profile, {1: 2, 2: 2, 3: 1})
    matrix = ex.fit_transform(corpus)
    assert matrix.doc_ids == ("a", "b")
    assert matrix.values.shape == (2, len(ex.inventory_))
    assert matrix.groups[1].engine == "ngx"
    # rerun is bitwise identical
    again = ex.transform(corpus)
    assert np.array_equal(matrix.values, again.values)


def test_fit_rejects_tagset_mismatch():
    corpus = small_corpus()
    profile = build_reference_profile(corpus)
    other = Corpus(corpus.documents, "other-id")
    ex = FeatureExtractor(TAGSET, FREQ, CONC, profile)
    with pytest.raises(TagsetMismatch):
        ex.fit(other)


def test_transform_requires_fit():
    corpus = small_corpus()
    ex = FeatureExtractor(TAGSET, FREQ, CONC, build_reference_profile(corpus))
    with pytest.raises(DataError):
        ex.transform(corpus)


def make_matrix():
    values = np.array([[1.0, 0.25], [2.0, 0.5], [3.0, 0.125]])
    return FeatureMatrix(
        ("a", "b", "c"),
        ("mtld", "foreignness"),
        values,
        (OCN, OCN, nmt("ngx")),
    )


def test_matrix_csv_roundtrip():
    m = make_matrix()
    text = m.to_csv()
    assert text.splitlines()[0] == "doc_id,origin,engine,mtld,foreignness"
    again = FeatureMatrix.from_csv(text, {"ngx": ("Foreign", "NA")})
    assert again == m


def test_matrix_csv_roundtrip_is_exact_for_awkward_floats():
    values = np.array([[1 / 3, 1e-17], [np.pi, 2.0 ** -40]])
    m = FeatureMatrix(("a", "b"), ("x", "y"), values, (OCN, OCN))
    again = FeatureMatrix.from_csv(m.to_csv())
    assert np.array_equal(again.values, values)


def test_matrix_csv_skips_comment_lines():
    text = "#config=abc\n" + make_matrix().to_csv()
    assert FeatureMatrix.from_csv(text).doc_ids == ("a", "b", "c")


def test_matrix_selection_helpers():
    m = make_matrix()
    sub = m.select_features(["foreignness"])
    assert sub.feature_names == ("foreignness",)
    np.testing.assert_array_equal(sub.values[:, 0], m.values[:, 1])
    with pytest.raises(DataError):
        m.select_features(["missing"])
    docs = m.select_docs([True, False, True])
    assert docs.doc_ids == ("a", "c")
    assert docs.values.shape == (2, 2)


def test_matrix_rejects_nonfinite():
    with pytest.raises(DataError):
        FeatureMatrix(("a",), ("x",), np.array([[np.nan]]), (OCN,))


def test_matrix_alignment_checks():
    with pytest.raises(DataError):
        FeatureMatrix(("a", "b"), ("x",), np.zeros((1, 1)), (OCN,))
    with pytest.raises(DataError):
        FeatureMatrix(("a",), ("x", "y"), np.zeros((1, 1)), (OCN,))
