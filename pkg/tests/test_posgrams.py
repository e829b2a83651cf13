from collections import Counter

import pytest

from helpers import TAGSET, one_doc_corpus, sent
from translationese.corpus import Corpus, Document
from translationese.errors import TagsetMismatch
from translationese.features.posgrams import (
    build_reference_profile,
    extract_npos,
    g2_keyness,
    iter_grams,
    select_npos_inventory,
)
from translationese.resources import load_profile, save_profile


def gram_count_oracle(doc, n):
    """Brute-force sentence-bounded counter."""
    counts = Counter()
    for s in doc.sentences:
        tags = [t.pos for t in s.tokens]
        for i in range(len(tags)):
            g = tuple(tags[i : i + n])
            if len(g) == n:
                counts[g] += 1
    return counts


def two_sentence_doc():
    return one_doc_corpus(
        [
            sent(("好", "a", 0, "HED"), ("人", "n", 1, "ATT"),
                 ("走", "v", 1, "COO")),
            sent(("人", "n", 0, "HED"), ("好", "a", 1, "ATT")),
        ]
    ).documents[0]


def test_grams_are_sentence_bounded():
    doc = two_sentence_doc()
    # bigrams: (a n), (n v) from sentence 1; (n a) from sentence 2.
    # No (v n) across the break.
    counts = gram_count_oracle(doc, 2)
    assert counts == {("a", "n"): 1, ("n", "v"): 1, ("n", "a"): 1}
    assert list(iter_grams(["a", "n", "v"], 2)) == [("a", "n"), ("n", "v")]
    assert list(iter_grams(["a"], 2)) == []


def test_reference_profile_sums_and_totals():
    corpus = one_doc_corpus([two_sentence_doc().sentences[0]])
    profile = build_reference_profile(corpus, max_n=3)
    assert profile.totals == (3, 2, 1)
    for table in profile.freqs:
        assert sum(table.values()) == pytest.approx(1.0)
    assert profile.frequency(1, "a") == pytest.approx(1 / 3)
    assert profile.frequency(2, "a n") == pytest.approx(1 / 2)
    assert profile.frequency(2, "v v") == 0.0


def test_profile_json_roundtrip(tmp_path):
    corpus = one_doc_corpus([two_sentence_doc().sentences[0]])
    profile = build_reference_profile(corpus)
    path = tmp_path / "profile.json"
    save_profile(profile, path)
    again = load_profile(path, expect_tagset_id=TAGSET.tagset_id)
    assert again == profile
    with pytest.raises(TagsetMismatch):
        load_profile(path, expect_tagset_id="other-tagset")


def test_g2_keyness_values():
    # equal relative frequencies carry no keyness
    assert g2_keyness(10, 100, 10, 100) == pytest.approx(0.0, abs=1e-12)
    # frozen oracle value: two-cell log-likelihood, reference cell
    # smoothed to 0.5 (worked by hand)
    assert g2_keyness(4, 100, 0, 100) == pytest.approx(3.0988357624522203)
    # more target surplus, more keyness
    assert g2_keyness(8, 100, 0, 100) > g2_keyness(4, 100, 0, 100)
    # a gram missing from the reference outranks an equally frequent
    # gram that the reference shares
    assert g2_keyness(5, 100, 0, 100) > g2_keyness(5, 100, 5, 100)


def test_select_inventory_prefers_target_specific_grams():
    # target is saturated with "z z" bigrams that the reference lacks
    target = one_doc_corpus(
        [sent(("咳", "z", 0, "HED"), *((f"咳{i}", "z", 1, "COO") for i in range(5)))]
    )
    reference = one_doc_corpus(
        [sent(("人", "n", 0, "HED"), ("走", "v", 1, "COO"), ("好", "a", 1, "ATT"))],
        doc_id="ref",
    )
    profile = build_reference_profile(reference)
    names = select_npos_inventory(target, profile, {1: 1, 2: 1})
    assert names == ("pos_1gram_z", "pos_2gram_z z")


def test_select_inventory_keeps_all_when_short(caplog):
    target = one_doc_corpus([sent(("人", "n", 0, "HED"), ("走", "v", 1, "COO"))])
    profile = build_reference_profile(target)
    with caplog.at_level("WARNING"):
        names = select_npos_inventory(target, profile, {2: 10})
    assert names == ("pos_2gram_n v",)
    assert any("keeping all" in r.message for r in caplog.records)


def test_select_inventory_tagset_mismatch():
    target = one_doc_corpus([sent(("人", "n", 0, "HED"))])
    profile = build_reference_profile(
        Corpus(target.documents, "another-tagset")
    )
    with pytest.raises(TagsetMismatch):
        select_npos_inventory(target, profile)


def test_extract_npos_relative_frequencies():
    doc = two_sentence_doc()
    out = extract_npos(
        doc, ["pos_1gram_n", "pos_1gram_wp", "pos_2gram_a n", "pos_2gram_v v"]
    )
    assert out["pos_1gram_n"] == pytest.approx(2 / 5)
    assert out["pos_1gram_wp"] == 0.0
    assert out["pos_2gram_a n"] == pytest.approx(1 / 3)
    assert out["pos_2gram_v v"] == 0.0
