"""Pluggable tagger backends: segment, PoS-tag, dependency-parse.

A backend declares its full tag inventory up front so the emitted corpus
can ship a matching tagset declaration.  The reference backend wraps LTP
(loaded lazily); the ``builtin`` backend is a dependency-free,
deterministic segmenter meant for tests and smoke runs, not linguistics.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Protocol

from .errors import BackendUnavailable

Arc = tuple[int, str]  # (head index, 0 = root; relation)


@dataclass(frozen=True)
class TagInventory:
    pos: frozenset[str]
    dep: frozenset[str]


class TaggerBackend(Protocol):
    backend_id: str
    model_id: str

    def inventory(self) -> TagInventory: ...

    def segment(self, text: str) -> list[list[str]]:
        """Split text into sentences of surface tokens."""
        ...

    def pos_tag(self, sentences: list[list[str]]) -> list[list[str]]: ...

    def dep_parse(self, sentences: list[list[str]]) -> list[list[Arc]]: ...


# ---------------------------------------------------------------------------
# Built-in deterministic backend

_SENT_END = "。！？…!?"
_POS_CYCLE = ("n", "v", "a", "d", "r", "p", "c", "u", "q", "m")
_DEP_CYCLE = ("ATT", "ADV", "SBV", "VOB", "COO")

_HAN = r"一-鿿㐀-䶿"
_TOKEN_RE = re.compile(
    rf"[{_HAN}]+|[A-Za-z]+(?:'[A-Za-z]+)?|\d+(?:\.\d+)?|\S"
)


class BuiltinBackend:
    """Greedy rule segmenter: Han runs are cut into two-character words
    (a trailing odd character joins the last word), Latin/digit runs stay
    whole, punctuation is one token per character.  PoS for Han words is
    a codepoint-sum hash into a fixed cycle, so output is reproducible.
    Parses are right-headed chains: token i attaches to token i-1."""

    backend_id = "builtin"

    def __init__(self, model_id: str = "default"):
        self.model_id = model_id

    def inventory(self) -> TagInventory:
        return TagInventory(
            pos=frozenset(_POS_CYCLE) | {"wp", "ws"},
            dep=frozenset(_DEP_CYCLE) | {"HED", "WP"},
        )

    def segment(self, text: str) -> list[list[str]]:
        sentences = []
        for chunk in self._split_sentences(text):
            words: list[str] = []
            for m in _TOKEN_RE.finditer(chunk):
                tok = m.group()
                if re.fullmatch(rf"[{_HAN}]+", tok):
                    words.extend(self._cut_han(tok))
                else:
                    words.append(tok)
            if words:
                sentences.append(words)
        return sentences

    @staticmethod
    def _split_sentences(text: str) -> list[str]:
        chunks, buf = [], []
        for c in text:
            buf.append(c)
            if c in _SENT_END:
                chunks.append("".join(buf))
                buf = []
        if buf:
            chunks.append("".join(buf))
        return [c.strip() for c in chunks if c.strip()]

    @staticmethod
    def _cut_han(run: str) -> list[str]:
        words = [run[i : i + 2] for i in range(0, len(run), 2)]
        if len(words) > 1 and len(words[-1]) == 1:
            words[-2:] = [words[-2] + words[-1]]
        return words

    def pos_tag(self, sentences: list[list[str]]) -> list[list[str]]:
        out = []
        for words in sentences:
            tags = []
            for w in words:
                if re.fullmatch(rf"[{_HAN}]+", w):
                    tags.append(_POS_CYCLE[sum(map(ord, w)) % len(_POS_CYCLE)])
                elif re.fullmatch(r"\d+(?:\.\d+)?", w):
                    tags.append("m")
                elif re.fullmatch(r"[A-Za-z]+(?:'[A-Za-z]+)?", w):
                    tags.append("ws")
                else:
                    tags.append("wp")
            out.append(tags)
        return out

    def dep_parse(self, sentences: list[list[str]]) -> list[list[Arc]]:
        out = []
        for words in sentences:
            tags = self.pos_tag([words])[0]
            arcs: list[Arc] = []
            for i, tag in enumerate(tags, 1):
                if i == 1:
                    arcs.append((0, "HED"))
                elif tag == "wp":
                    arcs.append((i - 1, "WP"))
                else:
                    arcs.append((i - 1, _DEP_CYCLE[i % len(_DEP_CYCLE)]))
            out.append(arcs)
        return out


# ---------------------------------------------------------------------------
# LTP reference backend (optional dependency, loaded lazily)

# LTP 863-style tag inventory.
_LTP_POS = frozenset(
    "a b c d e g h i j k m n nd nh ni nl ns nt nz o p q r u v wp ws x z".split()
)
_LTP_DEP = frozenset(
    "SBV VOB IOB FOB DBL ATT ADV CMP COO POB LAD RAD IS HED WP DC VV".split()
)


class LTPBackend:
    backend_id = "ltp"

    def __init__(self, model_id: str = "small"):
        self.model_id = model_id
        try:
            from ltp import LTP  # noqa: PLC0415
        except ImportError as exc:
            raise BackendUnavailable(
                "the 'ltp' package is not installed; pip install ltp"
            ) from exc
        try:
            self._ltp = LTP(model_id)
        except Exception as exc:  # model download/load failure
            raise BackendUnavailable(f"cannot load LTP model {model_id!r}: {exc}") from exc

    def inventory(self) -> TagInventory:
        return TagInventory(pos=_LTP_POS, dep=_LTP_DEP)

    def segment(self, text: str) -> list[list[str]]:
        sents = [s for s in re.split(rf"(?<=[{_SENT_END}])", text) if s.strip()]
        return [
            words
            for words in self._ltp.pipeline(sents, tasks=["cws"]).cws
            if words
        ]

    def pos_tag(self, sentences: list[list[str]]) -> list[list[str]]:
        return self._ltp.pipeline(sentences, tasks=["pos"]).pos

    def dep_parse(self, sentences: list[list[str]]) -> list[list[Arc]]:
        dep = self._ltp.pipeline(sentences, tasks=["dep"]).dep
        return [
            list(zip(sent["head"], sent["label"])) for sent in dep
        ]


_BACKENDS = {
    "builtin": BuiltinBackend,
    "ltp": LTPBackend,
}


def load_backend(backend_id: str, model_id: str) -> TaggerBackend:
    try:
        cls = _BACKENDS[backend_id]
    except KeyError:
        raise BackendUnavailable(
            f"unknown backend {backend_id!r}; available: {sorted(_BACKENDS)}"
        ) from None
    return cls(model_id)
