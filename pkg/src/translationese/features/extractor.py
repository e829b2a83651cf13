"""Feature-matrix assembly: every layer, one vector per document.

``FeatureExtractor`` follows the fit/transform convention: ``fit``
finalizes the inventory (keyness-selecting the PoS n-gram features
against the reference profile), ``transform`` produces the matrix.
Extraction is deterministic and pure; re-running on the same corpus
yields a bitwise-identical matrix.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

from ..base import BaseEstimator
from ..corpus import Corpus, Document, GroupLabel, Tagset
from ..errors import DataError, TagsetMismatch
from ..resources import LexiconResource, ReferenceProfile
from .inventory import (
    CONCRETENESS_METRICS,
    CONJ_RATIO_FEATURES,
    GENERAL_LEXICAL,
    GENERAL_SYNTACTICAL,
    LAYER_LEXICAL,
    LAYER_NPOS,
    LAYER_READABILITY,
    LAYER_SYNTACTICAL,
    LAYER_TRANSLATABILITY,
    PRONOUN_RATIO_FEATURES,
    PUNCT_RATIO_FEATURES,
    READABILITY_METRICS,
    TRANSLATABILITY_FEATURES,
    FeatureInventory,
    build_inventory,
)
from .lexical import extract_lexical
from .posgrams import extract_npos, select_npos_inventory
from .readability import extract_readability
from .syntactical import extract_syntactical
from .translatability import extract_translatability

_LEXICAL_STATIC = (
    set(GENERAL_LEXICAL)
    | set(CONJ_RATIO_FEATURES)
    | set(PRONOUN_RATIO_FEATURES)
    | set(PUNCT_RATIO_FEATURES)
)


def layer_of(name: str) -> str:
    """Layer of a feature, recoverable from the name alone."""
    if name in _LEXICAL_STATIC or name.startswith("postag_"):
        return LAYER_LEXICAL
    if name in GENERAL_SYNTACTICAL or name.startswith("deprel_"):
        return LAYER_SYNTACTICAL
    if name in READABILITY_METRICS or name in CONCRETENESS_METRICS:
        return LAYER_READABILITY
    if name in TRANSLATABILITY_FEATURES:
        return LAYER_TRANSLATABILITY
    if name.startswith("pos_") and "gram_" in name:
        return LAYER_NPOS
    raise DataError(f"unknown feature name {name!r}")


@dataclass(frozen=True)
class FeatureMatrix:
    doc_ids: tuple[str, ...]
    feature_names: tuple[str, ...]
    values: np.ndarray  # docs x features
    groups: tuple[GroupLabel, ...]

    def __post_init__(self):
        n_docs, n_feat = self.values.shape
        if len(self.doc_ids) != n_docs or len(self.groups) != n_docs:
            raise DataError("doc_ids/groups not aligned with matrix rows")
        if len(self.feature_names) != n_feat:
            raise DataError("feature_names not aligned with matrix columns")
        if not np.isfinite(self.values).all():
            raise DataError("feature matrix contains non-finite values")

    def __eq__(self, other):
        return (
            isinstance(other, FeatureMatrix)
            and self.doc_ids == other.doc_ids
            and self.feature_names == other.feature_names
            and self.groups == other.groups
            and np.array_equal(self.values, other.values)
        )

    @property
    def n_docs(self) -> int:
        return self.values.shape[0]

    def select_features(self, names) -> "FeatureMatrix":
        index = {n: i for i, n in enumerate(self.feature_names)}
        missing = [n for n in names if n not in index]
        if missing:
            raise DataError(f"features not in matrix: {missing[:5]}")
        cols = [index[n] for n in names]
        return replace(
            self,
            feature_names=tuple(names),
            values=self.values[:, cols].copy(),
        )

    def select_docs(self, mask) -> "FeatureMatrix":
        mask = np.asarray(mask, dtype=bool)
        return replace(
            self,
            doc_ids=tuple(d for d, m in zip(self.doc_ids, mask) if m),
            groups=tuple(g for g, m in zip(self.groups, mask) if m),
            values=self.values[mask].copy(),
        )

    def layer_features(self, layer: str) -> tuple[str, ...]:
        return tuple(n for n in self.feature_names if layer_of(n) == layer)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["doc_id", "origin", "engine", *self.feature_names])
        for i, doc_id in enumerate(self.doc_ids):
            g = self.groups[i]
            writer.writerow(
                [doc_id, g.origin, g.engine]
                + [repr(float(v)) for v in self.values[i]]
            )
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str, engine_meta: dict | None = None) -> "FeatureMatrix":
        """Parse a matrix CSV.

        ``engine_meta`` maps engine code -> (vendor_region, llm_kind);
        without it those GroupLabel fields default to NA (and Generic for
        LLM rows, to satisfy the label invariants).
        """
        engine_meta = engine_meta or {}
        # Tolerate leading comment lines (the CLI embeds a config digest).
        lines = [l for l in text.splitlines() if not l.startswith("#")]
        reader = csv.reader(io.StringIO("\n".join(lines)))
        header = next(reader)
        if header[:3] != ["doc_id", "origin", "engine"]:
            raise DataError("matrix CSV must start with doc_id, origin, engine")
        names = tuple(header[3:])
        doc_ids, groups, rows = [], [], []
        for row in reader:
            doc_id, origin, engine = row[0], row[1], row[2]
            region, kind = engine_meta.get(
                engine, ("NA", "Generic" if origin == "LLM" else "NA")
            )
            doc_ids.append(doc_id)
            groups.append(GroupLabel(origin, engine, region, kind))
            rows.append([float(v) for v in row[3:]])
        return cls(tuple(doc_ids), names, np.array(rows, dtype=float), tuple(groups))

    def save_csv(self, path: str | Path) -> None:
        Path(path).write_text(self.to_csv(), encoding="utf-8")

    @classmethod
    def load_csv(cls, path: str | Path, engine_meta: dict | None = None):
        return cls.from_csv(Path(path).read_text(encoding="utf-8"), engine_meta)


def extract_document(
    doc: Document,
    inventory: FeatureInventory,
    tagset: Tagset,
    freq: LexiconResource,
    conc: LexiconResource,
) -> dict[str, float]:
    values: dict[str, float] = {}
    values.update(extract_lexical(doc, tagset))
    values.update(extract_syntactical(doc, tagset))
    values.update(extract_readability(doc, freq, conc))
    values.update(extract_translatability(doc))
    values.update(extract_npos(doc, inventory.layer_names(LAYER_NPOS)))

    out = {}
    for name in inventory.names:
        try:
            v = values[name]
        except KeyError:
            raise DataError(f"doc {doc.doc_id!r}: no extractor for {name!r}") from None
        if not math.isfinite(v):
            raise DataError(f"doc {doc.doc_id!r}: non-finite value for {name!r}")
        out[name] = v
    return out


class FeatureExtractor(BaseEstimator):
    """Corpus -> FeatureMatrix transformer.

    Parameters
    ----------
    tagset : the declaration the corpus was parsed under.
    freq_lexicon, conc_lexicon : score lexicons for the readability layer.
    reference_profile : PoS n-gram profile of the reference corpus.
    npos_sizes : per-order inventory sizes, default {1: 10, 2: 49, 3: 60}.
    """

    def __init__(
        self,
        tagset: Tagset,
        freq_lexicon: LexiconResource,
        conc_lexicon: LexiconResource,
        reference_profile: ReferenceProfile,
        npos_sizes: dict[int, int] | None = None,
    ):
        self.tagset = tagset
        self.freq_lexicon = freq_lexicon
        self.conc_lexicon = conc_lexicon
        self.reference_profile = reference_profile
        self.npos_sizes = npos_sizes

    def fit(self, corpus: Corpus, y=None) -> "FeatureExtractor":
        if corpus.tagset_id != self.tagset.tagset_id:
            raise TagsetMismatch(
                f"corpus tagged under {corpus.tagset_id!r}, "
                f"extractor configured for {self.tagset.tagset_id!r}"
            )
        npos_names = select_npos_inventory(
            corpus, self.reference_profile, self.npos_sizes
        )
        self.inventory_ = build_inventory(self.tagset, npos_names)
        return self

    def transform(self, corpus: Corpus) -> FeatureMatrix:
        if not hasattr(self, "inventory_"):
            raise DataError("extractor is not fitted; call fit() first")
        inv = self.inventory_
        rows = np.empty((len(corpus.documents), len(inv)), dtype=float)
        for i, doc in enumerate(corpus.documents):
            vec = extract_document(
                doc, inv, self.tagset, self.freq_lexicon, self.conc_lexicon
            )
            rows[i] = [vec[name] for name in inv.names]
        return FeatureMatrix(
            tuple(d.doc_id for d in corpus.documents),
            inv.names,
            rows,
            tuple(d.group for d in corpus.documents),
        )

    def fit_transform(self, corpus: Corpus, y=None) -> FeatureMatrix:
        return self.fit(corpus).transform(corpus)


def extract_all(
    corpus: Corpus,
    inventory: FeatureInventory,
    tagset: Tagset,
    freq: LexiconResource,
    conc: LexiconResource,
) -> FeatureMatrix:
    """One FeatureVector per document under an already-finalized inventory."""
    rows = np.empty((len(corpus.documents), len(inventory)), dtype=float)
    for i, doc in enumerate(corpus.documents):
        vec = extract_document(doc, inventory, tagset, freq, conc)
        rows[i] = [vec[name] for name in inventory.names]
    return FeatureMatrix(
        tuple(d.doc_id for d in corpus.documents),
        inventory.names,
        rows,
        tuple(d.group for d in corpus.documents),
    )
