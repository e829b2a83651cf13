"""PoS n-gram features: reference profile, keyness ranking, per-doc counts.

N-grams are sentence-bounded (no gram crosses a sentence break).  The
feature inventory is refined against a reference corpus by Dunning
log-likelihood (G2) keyness, which damps highly frequent but uninformative
grams shared with the reference.
"""

from __future__ import annotations

import logging
import math
from collections import Counter
from typing import Iterable, Iterator

from ..corpus import Corpus, Document
from ..errors import TagsetMismatch
from ..resources import ReferenceProfile
from .inventory import DEFAULT_NPOS_SIZES, npos_feature

log = logging.getLogger(__name__)


def iter_grams(tags: list[str], n: int) -> Iterator[tuple[str, ...]]:
    for i in range(len(tags) - n + 1):
        yield tuple(tags[i : i + n])


def _doc_gram_counts(doc: Document, n: int) -> Counter:
    counts: Counter = Counter()
    for sent in doc.sentences:
        tags = [t.pos for t in sent.tokens]
        counts.update(iter_grams(tags, n))
    return counts


def build_reference_profile(reference: Corpus, max_n: int = 3) -> ReferenceProfile:
    """Relative n-gram frequencies (n = 1..max_n) over a reference corpus."""
    freqs = []
    totals = []
    for n in range(1, max_n + 1):
        counts: Counter = Counter()
        for doc in reference.documents:
            counts.update(_doc_gram_counts(doc, n))
        total = sum(counts.values())
        totals.append(total)
        freqs.append(
            {" ".join(g): c / total for g, c in counts.items()} if total else {}
        )
    return ReferenceProfile(reference.tagset_id, max_n, tuple(freqs), tuple(totals))


def g2_keyness(k_target: float, n_target: float, k_ref: float, n_ref: float) -> float:
    """Dunning log-likelihood of a gram's target vs reference frequency.

    Zero cells are smoothed by add-0.5 so the statistic stays defined and
    a gram absent from the reference outranks an equally frequent gram
    that the reference shares.
    """
    a = k_target if k_target > 0 else 0.5
    b = k_ref if k_ref > 0 else 0.5
    total = n_target + n_ref
    e1 = n_target * (a + b) / total
    e2 = n_ref * (a + b) / total
    return 2.0 * (a * math.log(a / e1) + b * math.log(b / e2))


def select_npos_inventory(
    target: Corpus,
    reference: ReferenceProfile,
    sizes: dict[int, int] | None = None,
) -> tuple[str, ...]:
    """Keyness-ranked n-gram feature names, top ``sizes[n]`` per order.

    Ranking is by G2 descending, ties broken by higher target frequency,
    then lexicographic gram name.  If fewer candidates exist than
    requested, all are kept with a warning.
    """
    if reference.tagset_id != target.tagset_id:
        raise TagsetMismatch(
            f"target tagged under {target.tagset_id!r}, "
            f"reference profile under {reference.tagset_id!r}"
        )
    sizes = dict(DEFAULT_NPOS_SIZES if sizes is None else sizes)
    selected: list[str] = []
    for n in sorted(sizes):
        want = sizes[n]
        if want <= 0:
            continue
        counts: Counter = Counter()
        for doc in target.documents:
            counts.update(_doc_gram_counts(doc, n))
        n_target = sum(counts.values())
        n_ref = reference.totals[n - 1]
        ranked = sorted(
            counts.items(),
            key=lambda item: (
                -g2_keyness(
                    item[1],
                    n_target,
                    reference.frequency(n, " ".join(item[0])) * n_ref,
                    n_ref,
                ),
                -item[1],
                " ".join(item[0]),
            ),
        )
        if len(ranked) < want:
            log.warning(
                "only %d candidate %d-grams for a requested %d; keeping all",
                len(ranked),
                n,
                want,
            )
        selected.extend(npos_feature(g) for g, _ in ranked[:want])
    return tuple(selected)


def extract_npos(doc: Document, gram_names: Iterable[str]) -> dict[str, float]:
    """Per-document relative frequency of each kept gram, within its order."""
    wanted: dict[int, list[tuple[str, tuple[str, ...]]]] = {}
    for name in gram_names:
        body = name.split("gram_", 1)[1]
        gram = tuple(body.split(" "))
        wanted.setdefault(len(gram), []).append((name, gram))

    out: dict[str, float] = {}
    for n, entries in wanted.items():
        counts = _doc_gram_counts(doc, n)
        total = sum(counts.values())
        for name, gram in entries:
            out[name] = counts.get(gram, 0) / total if total else 0.0
    return out
