"""Text cleaning: boilerplate stripping and punctuation-width normalization.

Width mapping, applied in this order:

1. full-width ASCII letters and digits (U+FF01..U+FF5E alphanumerics) are
   narrowed to their half-width forms;
2. the half-width punctuation marks , ; : ? ! ( ) are widened to their
   full-width Chinese forms when directly adjacent to a Han character.

The half-width full stop ``.`` is deliberately left alone: widening it
would corrupt decimal numbers and abbreviations.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

_HAN_RE = re.compile(r"[一-鿿㐀-䶿]")

# Boilerplate/meta phrases stripped by default; each entry is a regex
# applied with re.sub against the whole text.
DEFAULT_PATTERNS = (
    r"^\s*Sure,\s*here\s+is[^:：\n]*[:：]\s*",
    r"^\s*Here\s+is\s+the\s+translat[^:：\n]*[:：]\s*",
    r"^\s*以下是[^：:\n]*翻译[^：:\n]*[:：]\s*",
    r"^\s*翻译如下[:：]\s*",
)

_NARROW = {chr(0xFF01 + i): chr(0x21 + i) for i in range(0x5E)}
# keep only letters and digits from the full-width block
_NARROW = {
    k: v for k, v in _NARROW.items() if v.isalnum()
}

_WIDEN = {
    ",": "，",
    ";": "；",
    ":": "：",
    "?": "？",
    "!": "！",
    "(": "（",
    ")": "）",
}


def _is_han(c: str) -> bool:
    return bool(_HAN_RE.match(c))


def normalize_width(text: str) -> str:
    chars = [_NARROW.get(c, c) for c in text]
    out = []
    for i, c in enumerate(chars):
        if c in _WIDEN:
            prev_han = i > 0 and _is_han(chars[i - 1])
            next_han = i + 1 < len(chars) and _is_han(chars[i + 1])
            if prev_han or next_han:
                c = _WIDEN[c]
        out.append(c)
    return "".join(out)


def normalize_whitespace(text: str) -> str:
    lines = [re.sub(r"[ \t　]+", " ", l).strip() for l in text.split("\n")]
    return "\n".join(l for l in lines if l).strip()


@dataclass(frozen=True)
class CleaningRules:
    """Configurable cleaning: a regex pattern list plus the fixed
    whitespace/width normalizations."""

    patterns: tuple[str, ...] = field(default=DEFAULT_PATTERNS)

    def to_json(self) -> str:
        return json.dumps({"patterns": list(self.patterns)}, ensure_ascii=False)

    @classmethod
    def from_json(cls, payload: str) -> "CleaningRules":
        data = json.loads(payload)
        return cls(patterns=tuple(data["patterns"]))


def clean_text(raw: str, rules: CleaningRules | None = None) -> str:
    rules = rules or CleaningRules()
    text = raw
    for pattern in rules.patterns:
        text = re.sub(pattern, "", text, flags=re.IGNORECASE | re.MULTILINE)
    return normalize_whitespace(normalize_width(text))
