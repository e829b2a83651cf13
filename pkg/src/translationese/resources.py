"""External resources: score lexicons and PoS n-gram reference profiles.

Lexicon files are TSV (``surface<TAB>score``), UTF-8, ``#`` comments.
Reference profiles are cached as JSON with the tagset id embedded so a
cache built under one tagset cannot silently feed another.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

from .errors import DataError, EmptyLexicon, MalformedLine, TagsetMismatch

KIND_FREQUENCY = "Frequency"
KIND_CONCRETENESS = "Concreteness"

PROFILE_FORMAT_VERSION = 1


@dataclass(frozen=True)
class LexiconResource:
    kind: str
    entries: dict[str, float]

    def __post_init__(self):
        if not self.entries:
            raise EmptyLexicon(f"{self.kind} lexicon has no entries")
        bad = [s for s, v in self.entries.items() if not math.isfinite(v)]
        if bad:
            raise DataError(f"non-finite score for {bad[0]!r}")

    def __contains__(self, surface: str) -> bool:
        return surface in self.entries

    def __getitem__(self, surface: str) -> float:
        return self.entries[surface]

    def __len__(self):
        return len(self.entries)


def load_lexicon(path: str | Path, kind: str) -> LexiconResource:
    entries: dict[str, float] = {}
    for line_no, raw in enumerate(
        Path(path).read_text(encoding="utf-8").splitlines(), 1
    ):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) != 2:
            raise MalformedLine("expected `surface<TAB>score`", line_no)
        try:
            entries[cols[0]] = float(cols[1])
        except ValueError:
            raise MalformedLine(f"bad score {cols[1]!r}", line_no) from None
    return LexiconResource(kind, entries)


@dataclass(frozen=True)
class ReferenceProfile:
    """Relative frequencies of PoS n-grams (n = 1..max_n) in a reference
    corpus; gram keys are tags joined by a single space."""

    tagset_id: str
    max_n: int
    freqs: tuple[dict[str, float], ...]  # freqs[n-1] maps gram -> rel. freq.
    totals: tuple[int, ...]  # total gram count per order, for keyness

    def __post_init__(self):
        if len(self.freqs) != self.max_n or len(self.totals) != self.max_n:
            raise DataError("profile must carry one table per gram order")
        for n, table in enumerate(self.freqs, 1):
            if table and abs(sum(table.values()) - 1.0) > 1e-9:
                raise DataError(f"{n}-gram frequencies do not sum to 1")

    def frequency(self, n: int, gram: str) -> float:
        return self.freqs[n - 1].get(gram, 0.0)


def save_profile(profile: ReferenceProfile, path: str | Path) -> None:
    payload = {
        "format_version": PROFILE_FORMAT_VERSION,
        "tagset_id": profile.tagset_id,
        "max_n": profile.max_n,
        "freqs": [dict(sorted(t.items())) for t in profile.freqs],
        "totals": list(profile.totals),
    }
    Path(path).write_text(
        json.dumps(payload, ensure_ascii=False, sort_keys=True), encoding="utf-8"
    )


def load_profile(path: str | Path, expect_tagset_id: str | None = None) -> ReferenceProfile:
    payload = json.loads(Path(path).read_text(encoding="utf-8"))
    if payload.get("format_version") != PROFILE_FORMAT_VERSION:
        raise DataError(f"unsupported profile version in {path}")
    profile = ReferenceProfile(
        payload["tagset_id"],
        payload["max_n"],
        tuple(payload["freqs"]),
        tuple(payload["totals"]),
    )
    if expect_tagset_id is not None and profile.tagset_id != expect_tagset_id:
        raise TagsetMismatch(
            f"profile tagged under {profile.tagset_id!r}, "
            f"corpus under {expect_tagset_id!r}"
        )
    return profile
