"""Tag raw documents into the column-based tagged-corpus format.

Output layout under the target directory:

* ``corpus.txt`` — the tagged corpus.  Header comment lines record the
  backend and model; each document starts with a ``#doc`` line carrying
  the five group fields; token lines are
  ``index<TAB>surface<TAB>pos<TAB>head<TAB>deprel``; a blank line closes
  each sentence.
* ``tagset.txt`` — the backend's tag inventory as a declaration the
  downstream parser validates against (``[pos]`` / ``[dep]`` sections).

Both files are written atomically (temp file + rename).
"""

from __future__ import annotations

import logging
import os
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .backends import TaggerBackend, load_backend
from .cleaning import CleaningRules, clean_text
from .documents import RawDocument
from .errors import TaggingFailure

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class TaggedDocument:
    doc_id: str
    header: str  # the full "#doc ..." line
    body: str  # token lines and sentence breaks
    token_count: int
    segmentation_count: int  # tokens reported by the backend's segmenter


@dataclass(frozen=True)
class TaggingReport:
    tagged: tuple[TaggedDocument, ...]
    skipped: tuple[str, ...]  # doc_ids skipped (empty after cleaning)
    failed: tuple[str, ...]  # doc_ids that raised during tagging


def tag_document(
    backend: TaggerBackend, doc: RawDocument, rules: CleaningRules | None = None
) -> TaggedDocument | None:
    """Tag one document; returns None when cleaning leaves no text."""
    text = clean_text(doc.text, rules)
    if not text:
        log.warning("doc %r: empty after cleaning; skipped", doc.doc_id)
        return None

    sentences = backend.segment(text)
    if not sentences:
        log.warning("doc %r: segmenter produced no sentences; skipped", doc.doc_id)
        return None
    tags = backend.pos_tag(sentences)
    arcs = backend.dep_parse(sentences)
    if not (len(sentences) == len(tags) == len(arcs)):
        raise TaggingFailure(
            f"doc {doc.doc_id!r}: backend returned mismatched sentence counts"
        )

    lines: list[str] = []
    n_tokens = 0
    for words, sent_tags, sent_arcs in zip(sentences, tags, arcs):
        if not (len(words) == len(sent_tags) == len(sent_arcs)):
            raise TaggingFailure(
                f"doc {doc.doc_id!r}: backend returned mismatched token counts"
            )
        for i, (surface, pos, (head, deprel)) in enumerate(
            zip(words, sent_tags, sent_arcs), 1
        ):
            lines.append(f"{i}\t{surface}\t{pos}\t{head}\t{deprel}")
            n_tokens += 1
        lines.append("")

    header = (
        f"#doc {doc.doc_id}\t{doc.origin}\t{doc.engine}"
        f"\t{doc.vendor_region}\t{doc.llm_kind}"
    )
    return TaggedDocument(
        doc_id=doc.doc_id,
        header=header,
        body="\n".join(lines),
        token_count=n_tokens,
        segmentation_count=sum(len(s) for s in sentences),
    )


def _tag_in_worker(args) -> tuple[str, TaggedDocument | None, str | None]:
    backend_id, model_id, rules_json, doc = args
    backend = load_backend(backend_id, model_id)
    rules = CleaningRules.from_json(rules_json)
    try:
        return doc.doc_id, tag_document(backend, doc, rules), None
    except TaggingFailure as exc:
        return doc.doc_id, None, str(exc)


def tag_corpus(
    docs: list[RawDocument],
    backend: TaggerBackend,
    rules: CleaningRules | None = None,
    jobs: int = 1,
) -> TaggingReport:
    rules = rules or CleaningRules()
    tagged: list[TaggedDocument] = []
    skipped: list[str] = []
    failed: list[str] = []

    if jobs > 1:
        payload = [
            (backend.backend_id, backend.model_id, rules.to_json(), d) for d in docs
        ]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_tag_in_worker, payload))
        for doc_id, result, error in results:
            if error is not None:
                log.error("doc %r: %s", doc_id, error)
                failed.append(doc_id)
            elif result is None:
                skipped.append(doc_id)
            else:
                tagged.append(result)
    else:
        for doc in docs:
            try:
                result = tag_document(backend, doc, rules)
            except TaggingFailure as exc:
                log.error("%s", exc)
                failed.append(doc.doc_id)
                continue
            if result is None:
                skipped.append(doc.doc_id)
            else:
                tagged.append(result)

    if failed:
        log.warning("%d of %d documents failed to tag", len(failed), len(docs))
    return TaggingReport(tuple(tagged), tuple(skipped), tuple(failed))


def render_corpus(report: TaggingReport, backend: TaggerBackend) -> str:
    parts = [
        f"# backend {backend.backend_id}",
        f"# model {backend.model_id}",
        f"# tagset {tagset_id(backend)}",
    ]
    for doc in report.tagged:
        parts.append(doc.header)
        parts.append(doc.body)
    return "\n".join(parts) + "\n"


def tagset_id(backend: TaggerBackend) -> str:
    return f"{backend.backend_id}-{backend.model_id}"


def render_tagset(backend: TaggerBackend) -> str:
    inv = backend.inventory()
    lines = [f"#id {tagset_id(backend)}", "[pos]"]
    lines.extend(sorted(inv.pos))
    lines.append("[dep]")
    lines.extend(sorted(inv.dep))
    return "\n".join(lines) + "\n"


def _write_atomic(path: Path, text: str) -> None:
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_outputs(
    out_dir: Path, report: TaggingReport, backend: TaggerBackend
) -> tuple[Path, Path]:
    out_dir.mkdir(parents=True, exist_ok=True)
    corpus_path = out_dir / "corpus.txt"
    tagset_path = out_dir / "tagset.txt"
    _write_atomic(corpus_path, render_corpus(report, backend))
    _write_atomic(tagset_path, render_tagset(backend))
    return corpus_path, tagset_path
