"""Shared construction helpers for the test suite."""

from __future__ import annotations

import numpy as np

from translationese.config import default_tagset_path
from translationese.corpus import (
    Corpus,
    Document,
    GroupLabel,
    Sentence,
    Token,
    load_tagset,
)

TAGSET = load_tagset(default_tagset_path())

# One line per acceptance criterion, echoed in the terminal summary.
ACCEPTANCE_LINES: list[str] = []


def record_criterion(name: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    line = f"[{status}] {name}" + (f" ({detail})" if detail else "")
    ACCEPTANCE_LINES.append(line)
    assert ok, line

OCN = GroupLabel("OCN")
OEN = GroupLabel("OEN")


def nmt(engine="NGT", region="Foreign"):
    return GroupLabel("NMT", engine, region, "NA")


def llm(engine="LCG", region="Foreign", kind="Generic"):
    return GroupLabel("LLM", engine, region, kind)


def tok(surface, pos="n", head=0, deprel="HED"):
    return Token(surface, pos, head, deprel)


def sent(*rows):
    """rows: (surface, pos, head, deprel) tuples."""
    return Sentence(tuple(Token(*r) for r in rows))


def chain_sentence(surfaces, pos="n"):
    """Chain tree: token 1 is the root, token i hangs off token i-1."""
    rows = []
    for i, s in enumerate(surfaces, 1):
        if i == 1:
            rows.append(Token(s, pos, 0, "HED"))
        else:
            rows.append(Token(s, pos, i - 1, "ATT"))
    return Sentence(tuple(rows))


def doc(doc_id, sentences, group=OCN):
    return Document(doc_id, group, tuple(sentences))


def one_doc_corpus(sentences, doc_id="d1", group=OCN):
    return Corpus((doc(doc_id, sentences, group),), TAGSET.tagset_id)


def han_word(i: int, length: int = 2) -> str:
    """Deterministic fake Chinese word: `length` Han chars indexed by i."""
    return "".join(chr(0x4E00 + (i * 7 + j) % 20000) for j in range(length))


def random_tree_heads(n: int, rng: np.random.Generator) -> list[int]:
    """A proper single-root tree: token 1 is root, i attaches left of i."""
    return [0] + [int(rng.integers(1, i)) for i in range(2, n + 1)]


def random_corpus(rng: np.random.Generator, n_docs=3, n_sents=4, max_len=12):
    """A random but valid corpus under the default tagset."""
    pos_tags = sorted(TAGSET.pos)
    deps = sorted(TAGSET.dep - {"HED"})
    docs = []
    for d in range(n_docs):
        sentences = []
        for _ in range(n_sents):
            n = int(rng.integers(1, max_len + 1))
            heads = random_tree_heads(n, rng)
            rows = []
            for i in range(n):
                surface = han_word(int(rng.integers(0, 5000)), int(rng.integers(1, 4)))
                pos = pos_tags[int(rng.integers(0, len(pos_tags)))]
                deprel = "HED" if heads[i] == 0 else deps[int(rng.integers(0, len(deps)))]
                rows.append(Token(surface, pos, heads[i], deprel))
            sentences.append(Sentence(tuple(rows)))
        docs.append(Document(f"doc{d}", OCN, tuple(sentences)))
    return Corpus(tuple(docs), TAGSET.tagset_id)
