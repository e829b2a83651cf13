import math

import numpy as np
import pytest

from helpers import TAGSET, one_doc_corpus, random_corpus, sent
from translationese.features.syntactical import extract_syntactical


def syntactical_oracle(doc):
    """Aggregate tree statistics via explicit adjacency lists (independent
    of the production walk-to-root implementation)."""
    lengths = [len(s) for s in doc.sentences]
    n_tok = sum(lengths)
    n_sent = len(lengths)

    dep_dists, left, non_root, leaves = [], 0, 0, 0
    depth_sum = 0.0
    for s in doc.sentences:
        n = len(s)
        children = {i: [] for i in range(0, n + 1)}
        for i, t in enumerate(s.tokens, 1):
            children[t.head].append(i)
            if t.head != 0:
                non_root += 1
                dep_dists.append(abs(i - t.head))
                if t.head > i:
                    left += 1
        # bfs from the roots
        depth = {r: 1 for r in children[0]}
        frontier = list(children[0])
        while frontier:
            nxt = []
            for node in frontier:
                for c in children[node]:
                    depth[c] = depth[node] + 1
                    nxt.append(c)
            frontier = nxt
        depth_sum += max(depth.values()) if depth else float(n)
        leaves += sum(1 for i in range(1, n + 1) if not children[i])

    mean_len = n_tok / n_sent
    return {
        "words_per_sentence": mean_len,
        "chars_per_sentence": sum(t.char_count for t in doc.tokens) / n_sent,
        "sentence_length_std": math.sqrt(
            sum((l - mean_len) ** 2 for l in lengths) / n_sent
        ),
        "mean_dependency_distance": (
            sum(dep_dists) / len(dep_dists) if dep_dists else 0.0
        ),
        "avg_children_per_node": non_root / n_tok,
        "mean_tree_depth": depth_sum / n_sent,
        "leaf_node_ratio": leaves / n_tok,
        "left_branching_ratio": left / non_root if non_root else 0.0,
    }


FIXTURE = [
    sent(
        ("我", "r", 2, "SBV"),
        ("爱", "v", 0, "HED"),
        ("美丽", "a", 4, "ATT"),
        ("中国", "ns", 2, "VOB"),
        ("。", "wp", 2, "WP"),
    ),
    sent(("好", "a", 0, "HED")),
]


def test_hand_worked_tree():
    doc = one_doc_corpus(FIXTURE).documents[0]
    out = extract_syntactical(doc, TAGSET)
    assert out["words_per_sentence"] == 3.0
    assert out["chars_per_sentence"] == pytest.approx(8 / 2)
    assert out["sentence_length_std"] == pytest.approx(2.0)
    # distances: 1, 1, 2, 3 over the four non-root tokens
    assert out["mean_dependency_distance"] == pytest.approx(7 / 4)
    assert out["avg_children_per_node"] == pytest.approx(4 / 6)
    # depths: root 1, tokens 1/4/5 at 2, token 3 at 3 -> max 3; second sent 1
    assert out["mean_tree_depth"] == pytest.approx((3 + 1) / 2)
    # leaves: tokens 1, 3, 5 in sent 1 and the singleton in sent 2
    assert out["leaf_node_ratio"] == pytest.approx(4 / 6)
    assert out["left_branching_ratio"] == pytest.approx(2 / 4)
    assert out["question_ratio"] == 0.0
    assert out["exclaim_ratio"] == 0.0


def test_question_exclaim_ratios():
    doc = one_doc_corpus(
        [
            sent(("好", "a", 0, "HED"), ("？", "wp", 1, "WP")),
            sent(("好", "a", 0, "HED"), ("！", "wp", 1, "WP")),
            sent(("好", "a", 0, "HED"), ("。", "wp", 1, "WP")),
        ]
    ).documents[0]
    out = extract_syntactical(doc, TAGSET)
    assert out["question_ratio"] == pytest.approx(1 / 3)
    assert out["exclaim_ratio"] == pytest.approx(1 / 3)


def test_deprel_ratios():
    doc = one_doc_corpus(FIXTURE).documents[0]
    out = extract_syntactical(doc, TAGSET)
    assert out["deprel_HED"] == pytest.approx(2 / 6)
    assert out["deprel_SBV"] == pytest.approx(1 / 6)
    assert out["deprel_IOB"] == 0.0
    total = sum(v for k, v in out.items() if k.startswith("deprel_"))
    assert total == pytest.approx(1.0, abs=1e-12)


def test_matches_oracle_on_random_trees():
    rng = np.random.default_rng(11)
    for _ in range(30):
        doc = random_corpus(rng, n_docs=1, n_sents=5, max_len=15).documents[0]
        out = extract_syntactical(doc, TAGSET)
        for key, expected in syntactical_oracle(doc).items():
            assert out[key] == pytest.approx(expected, abs=1e-12), key
