"""Syntactical layer: sentence-shape and dependency-tree statistics."""

from __future__ import annotations

import math

from ..corpus import Document, Sentence, Tagset, TERM_EXCLAIM, TERM_QUESTION
from .inventory import deprel_feature


def _token_depths(sentence: Sentence) -> list[int]:
    """Depth of each token, root = 1.  Multi-root sentences treat every
    head=0 token as a root; a head cycle caps the walk at sentence length."""
    n = len(sentence)
    depths = []
    for i in range(n):
        depth = 1
        cur = i
        for _ in range(n):
            head = sentence.tokens[cur].head
            if head == 0:
                break
            depth += 1
            cur = head - 1
        depths.append(depth)
    return depths


def extract_syntactical(doc: Document, tagset: Tagset) -> dict[str, float]:
    sents = doc.sentences
    n_sent = len(sents)
    lengths = [len(s) for s in sents]
    n_tok = sum(lengths)
    chars = sum(t.char_count for t in doc.tokens)

    mean_len = n_tok / n_sent
    var_len = sum((l - mean_len) ** 2 for l in lengths) / n_sent

    dep_dist_sum = 0.0
    non_root = 0
    left_branching = 0
    has_child: set[tuple[int, int]] = set()
    depth_sum = 0.0
    for s_idx, sent in enumerate(sents):
        for i, tok in enumerate(sent.tokens, 1):
            if tok.head != 0:
                dep_dist_sum += abs(i - tok.head)
                non_root += 1
                if tok.head > i:
                    left_branching += 1
                has_child.add((s_idx, tok.head))
        depth_sum += max(_token_depths(sent))

    leaf_count = sum(
        1
        for s_idx, sent in enumerate(sents)
        for i in range(1, len(sent) + 1)
        if (s_idx, i) not in has_child
    )

    out = {
        "words_per_sentence": mean_len,
        "chars_per_sentence": chars / n_sent,
        "sentence_length_std": math.sqrt(var_len),
        "question_ratio": sum(1 for s in sents if s.terminator == TERM_QUESTION)
        / n_sent,
        "exclaim_ratio": sum(1 for s in sents if s.terminator == TERM_EXCLAIM)
        / n_sent,
        "mean_dependency_distance": dep_dist_sum / non_root if non_root else 0.0,
        "avg_children_per_node": non_root / n_tok,
        "mean_tree_depth": depth_sum / n_sent,
        "leaf_node_ratio": leaf_count / n_tok,
        "left_branching_ratio": left_branching / non_root if non_root else 0.0,
    }

    dep_counts: dict[str, int] = {}
    for tok in doc.tokens:
        dep_counts[tok.deprel] = dep_counts.get(tok.deprel, 0) + 1
    for rel in sorted(tagset.dep):
        out[deprel_feature(rel)] = dep_counts.get(rel, 0) / n_tok
    return out
