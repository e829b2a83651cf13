"""Adapter acceptance: output of a 50-document tagging run parses under
the downstream corpus parser with zero validation errors, and per-doc
token counts equal the backend's segmentation counts."""

import random

from helpers import record_criterion
from tagger_adapter.backends import BuiltinBackend
from tagger_adapter.documents import RawDocument
from tagger_adapter.tagging import tag_corpus, write_outputs
from translationese.corpus import load_tagset, parse_corpus_file

PUNCT = "，、；："
END = "。！？"


def synth_chinese_text(rng: random.Random) -> str:
    """A few paragraphs of synthetic Chinese with mixed-in Latin/digits."""
    parts = []
    for _ in range(rng.randint(3, 8)):
        sent = []
        for _ in range(rng.randint(4, 12)):
            word = "".join(
                chr(rng.randint(0x4E00, 0x9FA5)) for _ in range(rng.randint(1, 4))
            )
            sent.append(word)
            if rng.random() < 0.1:
                sent.append(rng.choice(["GDP", "2024", "AI", "3.5"]))
            if rng.random() < 0.15:
                sent.append(rng.choice(PUNCT))
        parts.append("".join(sent) + rng.choice(END))
    return "".join(parts)


def test_adapter_output_parses_cleanly(tmp_path):
    rng = random.Random(0)
    docs = [
        RawDocument(f"doc{i:03d}", synth_chinese_text(rng), "OCN")
        for i in range(50)
    ]
    backend = BuiltinBackend()
    report = tag_corpus(docs, backend)
    corpus_path, tagset_path = write_outputs(tmp_path, report, backend)

    corpus = parse_corpus_file(corpus_path, load_tagset(tagset_path))

    seg_counts = {d.doc_id: d.segmentation_count for d in report.tagged}
    parsed_counts = {d.doc_id: d.token_count for d in corpus.documents}
    record_criterion(
        "adapter output: 50 docs parse cleanly, token counts = segmentation",
        len(corpus.documents) == 50
        and not corpus.warnings
        and parsed_counts == seg_counts,
        f"{len(corpus.documents)} docs, {len(corpus.warnings)} parse warnings, "
        f"{sum(parsed_counts.values())} tokens",
    )
