import pytest

from helpers import one_doc_corpus, sent
from translationese.features.translatability import extract_translatability


def test_hand_worked_values():
    doc = one_doc_corpus(
        [
            sent(
                ("这", "r", 2, "SBV"),
                ("是", "v", 0, "HED"),
                ("GDP", "ws", 4, "ATT"),
                ("数据", "n", 2, "VOB"),
                ("。", "wp", 2, "WP"),
            ),
            sent(
                ("Hello", "ws", 0, "HED"),
                ("World", "ws", 1, "COO"),
                ("Foo", "ws", 1, "COO"),
                ("Bar", "ws", 1, "COO"),
                ("。", "wp", 1, "WP"),
            ),
        ]
    ).documents[0]
    out = extract_translatability(doc)
    # only the second sentence has a Latin run longer than 3 tokens
    assert out["completeness"] == pytest.approx(1 / 2)
    # 3 + 5 + 5 + 3 + 3 Latin chars over 4 Han chars
    assert out["foreignness"] == pytest.approx(19 / 4)
    assert out["code_switching"] == pytest.approx(1 / 2)  # first sentence only
    assert out["abbreviation"] == pytest.approx(1 / 10)  # GDP
    # non-punct tokens: 8, of which 5 are Latin script
    assert out["untranslated"] == pytest.approx(5 / 8)


def test_run_must_exceed_three_tokens():
    doc = one_doc_corpus(
        [
            sent(
                ("A", "ws", 0, "HED"),
                ("B", "ws", 1, "COO"),
                ("C", "ws", 1, "COO"),
                ("了", "u", 1, "RAD"),
                ("D", "ws", 1, "COO"),
            )
        ]
    ).documents[0]
    # longest run is exactly 3: still counts as complete
    assert extract_translatability(doc)["completeness"] == 1.0


def test_pure_chinese_doc():
    doc = one_doc_corpus(
        [sent(("中国", "ns", 0, "HED"), ("。", "wp", 1, "WP"))]
    ).documents[0]
    out = extract_translatability(doc)
    assert out == {
        "completeness": 1.0,
        "foreignness": 0.0,
        "code_switching": 0.0,
        "abbreviation": 0.0,
        "untranslated": 0.0,
    }


def test_no_han_denominator(caplog):
    doc = one_doc_corpus([sent(("OK", "ws", 0, "HED"))]).documents[0]
    with caplog.at_level("WARNING"):
        out = extract_translatability(doc)
    assert out["foreignness"] == 2.0  # Latin char count over denominator 1
    assert out["abbreviation"] == 1.0


def test_abbreviation_bounds():
    doc = one_doc_corpus(
        [
            sent(
                ("A", "ws", 0, "HED"),  # 1 char: too short
                ("NASA", "ws", 1, "COO"),
                ("ABCDEFG", "ws", 1, "COO"),  # 7 chars: too long
                ("Usa", "ws", 1, "COO"),  # not all caps
            )
        ]
    ).documents[0]
    assert extract_translatability(doc)["abbreviation"] == pytest.approx(1 / 4)
