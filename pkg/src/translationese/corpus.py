"""In-memory model of tagged corpora and the column-based corpus format.

File format (UTF-8 text):

* ``#doc <doc_id>\\t<origin>\\t<engine>\\t<vendor_region>\\t<llm_kind>``
  starts a document;
* one token per line, TAB-separated: ``index  surface  pos  head  deprel``
  (head 0 = sentence root, otherwise 1-based index of the governor);
* a blank line closes the current sentence;
* any other line starting with ``#`` is a comment.

A tagset declaration file lists the legal PoS tags and dependency
relations, one per line, under ``[pos]`` / ``[dep]`` headers; an optional
``#id <name>`` line names the tagset (default: file stem).

All domain objects are immutable after construction and safe to share
across threads.
"""

from __future__ import annotations

import unicodedata
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from .errors import (
    DanglingHead,
    DataError,
    DuplicateDocId,
    EmptySurface,
    MalformedLine,
    UnknownTag,
)

ORIGINS = frozenset({"OCN", "NMT", "LLM", "OEN"})
VENDOR_REGIONS = frozenset({"China", "Foreign", "NA"})
LLM_KINDS = frozenset({"TranslationSpecific", "Generic", "NA"})

SCRIPT_HAN = "Han"
SCRIPT_LATIN = "Latin"
SCRIPT_DIGIT = "Digit"
SCRIPT_PUNCT = "Punct"
SCRIPT_MIXED = "Mixed"
SCRIPT_OTHER = "Other"

TERM_PERIOD = "Period"
TERM_QUESTION = "Question"
TERM_EXCLAIM = "Exclaim"
TERM_ELLIPSIS = "Ellipsis"
TERM_OTHER = "Other"

# Round brackets only; the half-width and full-width forms.
BRACKET_CHARS = frozenset("()（）")

# CJK punctuation that Unicode files under symbol categories.
_EXTRA_PUNCT = frozenset("～")

_HAN_RANGES = (
    (0x4E00, 0x9FFF),
    (0x3400, 0x4DBF),
    (0xF900, 0xFAFF),
    (0x20000, 0x2EBEF),
)


def _is_han(ch: str) -> bool:
    cp = ord(ch)
    return any(lo <= cp <= hi for lo, hi in _HAN_RANGES)


def is_punct_char(ch: str) -> bool:
    return unicodedata.category(ch).startswith("P") or ch in _EXTRA_PUNCT


def script_classify(surface: str) -> str:
    """Classify a surface form by the scripts of its characters."""
    if not surface:
        raise EmptySurface("cannot classify an empty surface form")
    if all(is_punct_char(c) for c in surface):
        return SCRIPT_PUNCT
    has_han = any(_is_han(c) for c in surface)
    has_latin = any(("a" <= c <= "z") or ("A" <= c <= "Z") for c in surface)
    has_digit = any(c.isdigit() for c in surface)
    kinds = sum((has_han, has_latin, has_digit))
    if kinds >= 2:
        return SCRIPT_MIXED
    if has_han and all(_is_han(c) for c in surface):
        return SCRIPT_HAN
    if has_latin and all(("a" <= c <= "z") or ("A" <= c <= "Z") for c in surface):
        return SCRIPT_LATIN
    if has_digit and all(c.isdigit() for c in surface):
        return SCRIPT_DIGIT
    return SCRIPT_OTHER


@dataclass(frozen=True)
class Token:
    surface: str
    pos: str
    head: int  # 0 = root, else 1-based index within the sentence
    deprel: str
    char_count: int = field(init=False)
    script: str = field(init=False)

    def __post_init__(self):
        if not self.surface:
            raise EmptySurface("token surface must be non-empty")
        object.__setattr__(self, "char_count", len(self.surface))
        object.__setattr__(self, "script", script_classify(self.surface))


def derive_terminator(tokens: tuple[Token, ...]) -> str:
    for tok in reversed(tokens):
        if tok.script != SCRIPT_PUNCT:
            continue
        s = tok.surface
        if "…" in s or "⋯" in s or s in {"......", "..."}:
            return TERM_ELLIPSIS
        if "？" in s or "?" in s:
            return TERM_QUESTION
        if "！" in s or "!" in s:
            return TERM_EXCLAIM
        if "。" in s or s == ".":
            return TERM_PERIOD
        return TERM_OTHER
    return TERM_OTHER


@dataclass(frozen=True)
class Sentence:
    tokens: tuple[Token, ...]
    terminator: str = field(init=False)

    def __post_init__(self):
        if not self.tokens:
            raise DataError("sentence must contain at least one token")
        object.__setattr__(self, "terminator", derive_terminator(self.tokens))

    def __len__(self):
        return len(self.tokens)

    @property
    def roots(self) -> tuple[int, ...]:
        """1-based indices of head=0 tokens (ideally exactly one)."""
        return tuple(i + 1 for i, t in enumerate(self.tokens) if t.head == 0)


@dataclass(frozen=True)
class GroupLabel:
    origin: str
    engine: str = ""
    vendor_region: str = "NA"
    llm_kind: str = "NA"

    def __post_init__(self):
        if self.origin not in ORIGINS:
            raise DataError(f"unknown origin {self.origin!r}")
        if self.vendor_region not in VENDOR_REGIONS:
            raise DataError(f"unknown vendor_region {self.vendor_region!r}")
        if self.llm_kind not in LLM_KINDS:
            raise DataError(f"unknown llm_kind {self.llm_kind!r}")
        if (self.engine == "") != (self.origin in {"OCN", "OEN"}):
            raise DataError(
                f"engine must be empty iff origin is original "
                f"(origin={self.origin!r}, engine={self.engine!r})"
            )
        if self.llm_kind != "NA" and self.origin != "LLM":
            raise DataError("llm_kind applies to LLM documents only")


@dataclass(frozen=True)
class Document:
    doc_id: str
    group: GroupLabel
    sentences: tuple[Sentence, ...]

    def __post_init__(self):
        if not self.doc_id:
            raise DataError("doc_id must be non-empty")
        if not self.sentences:
            raise DataError(f"document {self.doc_id!r} has no sentences")

    @property
    def tokens(self):
        for sent in self.sentences:
            yield from sent.tokens

    @property
    def token_count(self) -> int:
        return sum(len(s) for s in self.sentences)


@dataclass(frozen=True)
class Corpus:
    documents: tuple[Document, ...]
    tagset_id: str
    warnings: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        ids = [d.doc_id for d in self.documents]
        if len(set(ids)) != len(ids):
            raise DataError("doc_ids must be unique")

    def __len__(self):
        return len(self.documents)


@dataclass(frozen=True)
class Tagset:
    tagset_id: str
    pos: frozenset[str]
    dep: frozenset[str]


def load_tagset(path: str | Path) -> Tagset:
    path = Path(path)
    pos: set[str] = set()
    dep: set[str] = set()
    tagset_id = path.stem
    section = None
    for line_no, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#id "):
            tagset_id = line[4:].strip()
            continue
        if line.startswith("#"):
            continue
        if line == "[pos]":
            section = pos
            continue
        if line == "[dep]":
            section = dep
            continue
        if section is None:
            raise MalformedLine("tag before any [pos]/[dep] header", line_no)
        section.add(line)
    if not pos or not dep:
        raise DataError(f"tagset {path} must declare both pos and dep tags")
    return Tagset(tagset_id, frozenset(pos), frozenset(dep))


def _parse_doc_header(rest: str, line_no: int) -> tuple[str, GroupLabel]:
    cols = rest.split("\t")
    if len(cols) != 5:
        raise MalformedLine(
            f"#doc header needs 5 tab-separated fields, got {len(cols)}", line_no
        )
    doc_id, origin, engine, vendor_region, llm_kind = cols
    try:
        return doc_id, GroupLabel(origin, engine, vendor_region, llm_kind)
    except DataError as exc:
        raise MalformedLine(str(exc), line_no) from exc


class _SentenceBuilder:
    def __init__(self):
        self.rows: list[tuple[int, str, str, int, str, int]] = []

    def add(self, index, surface, pos, head, deprel, line_no):
        self.rows.append((index, surface, pos, head, deprel, line_no))

    def build(self, warnings: list[str], doc_id: str) -> Sentence:
        n = len(self.rows)
        tokens = []
        for index, surface, pos, head, deprel, line_no in self.rows:
            if head < 0 or head > n or head == index:
                raise DanglingHead(head, n, line_no)
            tokens.append(Token(surface, pos, head, deprel))
        sent = Sentence(tuple(tokens))
        n_roots = len(sent.roots)
        if n_roots != 1:
            first_line = self.rows[0][5]
            warnings.append(
                f"doc {doc_id!r}, sentence at line {first_line}: "
                f"{n_roots} root tokens (expected 1)"
            )
        return sent


def parse_corpus(text: str, tagset: Tagset) -> Corpus:
    """Parse the canonical tagged format, validating against *tagset*.

    Tag and head errors are fatal; multi-root / zero-root sentences are
    recorded as warnings on the returned Corpus.
    """
    warnings: list[str] = []
    documents: list[Document] = []
    seen_ids: set[str] = set()

    doc_id: str | None = None
    group: GroupLabel | None = None
    sentences: list[Sentence] = []
    builder = _SentenceBuilder()

    def close_sentence():
        if builder.rows:
            sentences.append(builder.build(warnings, doc_id or "?"))
            builder.rows.clear()

    def close_document(line_no: int):
        nonlocal doc_id, group
        if doc_id is None:
            return
        close_sentence()
        if not sentences:
            raise MalformedLine(f"document {doc_id!r} has no sentences", line_no)
        documents.append(Document(doc_id, group, tuple(sentences)))
        sentences.clear()
        doc_id = None
        group = None

    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.rstrip("\n")
        if line.startswith("#doc "):
            close_document(line_no)
            new_id, new_group = _parse_doc_header(line[5:], line_no)
            if new_id in seen_ids:
                raise DuplicateDocId(new_id, line_no)
            seen_ids.add(new_id)
            doc_id, group = new_id, new_group
            continue
        if line.startswith("#"):
            continue
        if not line.strip():
            close_sentence()
            continue
        if doc_id is None:
            raise MalformedLine("token line before any #doc header", line_no)
        cols = line.split("\t")
        if len(cols) != 5:
            raise MalformedLine(
                f"expected 5 tab-separated columns, got {len(cols)}", line_no
            )
        idx_s, surface, pos, head_s, deprel = cols
        try:
            index = int(idx_s)
            head = int(head_s)
        except ValueError:
            raise MalformedLine("index and head must be integers", line_no) from None
        if index != len(builder.rows) + 1:
            raise MalformedLine(
                f"token index {index} out of sequence "
                f"(expected {len(builder.rows) + 1})",
                line_no,
            )
        if not surface:
            raise MalformedLine("empty surface form", line_no)
        if pos not in tagset.pos:
            raise UnknownTag(pos, "pos", line_no)
        if deprel not in tagset.dep:
            raise UnknownTag(deprel, "dep", line_no)
        builder.add(index, surface, pos, head, deprel, line_no)

    close_document(line_no=-1)
    if not documents:
        raise DataError("input contains no documents")
    return Corpus(tuple(documents), tagset.tagset_id, tuple(warnings))


def parse_corpus_file(path: str | Path, tagset: Tagset) -> Corpus:
    return parse_corpus(Path(path).read_text(encoding="utf-8"), tagset)


def serialize_corpus(corpus: Corpus) -> str:
    """Inverse of parse_corpus up to comments and blank-line placement."""
    out: list[str] = []
    for doc in corpus.documents:
        g = doc.group
        out.append(
            f"#doc {doc.doc_id}\t{g.origin}\t{g.engine}"
            f"\t{g.vendor_region}\t{g.llm_kind}"
        )
        for sent in doc.sentences:
            for i, tok in enumerate(sent.tokens, 1):
                out.append(f"{i}\t{tok.surface}\t{tok.pos}\t{tok.head}\t{tok.deprel}")
            out.append("")
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class GroupStats:
    origin: str
    engine: str
    texts: int
    tokens: int
    types: int


def corpus_stats(corpus: Corpus) -> list[GroupStats]:
    """Texts / tokens / types per (origin, engine) group."""
    if not corpus.documents:
        raise DataError("corpus is empty")
    texts: Counter = Counter()
    tokens: Counter = Counter()
    types: dict[tuple[str, str], set[str]] = {}
    for doc in corpus.documents:
        key = (doc.group.origin, doc.group.engine)
        texts[key] += 1
        tokens[key] += doc.token_count
        types.setdefault(key, set()).update(t.surface for t in doc.tokens)
    return [
        GroupStats(origin, engine, texts[k], tokens[k], len(types[k]))
        for k in sorted(texts)
        for origin, engine in [k]
    ]
