"""Raw (untagged) documents and their sidecar group metadata."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

from .errors import ValidationError

META_COLUMNS = ("doc_id", "origin", "engine", "vendor_region", "llm_kind")


@dataclass(frozen=True)
class RawDocument:
    """An untagged text plus the group fields carried into the output header."""

    doc_id: str
    text: str
    origin: str
    engine: str = ""
    vendor_region: str = "NA"
    llm_kind: str = "NA"

    def __post_init__(self):
        if not self.doc_id:
            raise ValidationError("doc_id must be non-empty")
        if not self.text.strip():
            raise ValidationError(f"document {self.doc_id!r} has empty text")


def load_metadata(path: str | Path) -> dict[str, dict[str, str]]:
    """Read the sidecar CSV mapping doc_id to its group fields."""
    path = Path(path)
    with path.open(encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or tuple(reader.fieldnames) != META_COLUMNS:
            raise ValidationError(
                f"{path}: expected header {','.join(META_COLUMNS)}, "
                f"got {reader.fieldnames}"
            )
        meta: dict[str, dict[str, str]] = {}
        for row in reader:
            doc_id = row["doc_id"]
            if doc_id in meta:
                raise ValidationError(f"{path}: duplicate doc_id {doc_id!r}")
            meta[doc_id] = row
    return meta


def raw_documents_from_files(
    paths: list[Path], meta: dict[str, dict[str, str]]
) -> list[RawDocument]:
    """One document per file; the file stem is the doc_id."""
    docs = []
    for path in paths:
        doc_id = path.stem
        if doc_id not in meta:
            raise ValidationError(f"no metadata row for doc_id {doc_id!r}")
        row = meta[doc_id]
        docs.append(
            RawDocument(
                doc_id=doc_id,
                text=path.read_text(encoding="utf-8"),
                origin=row["origin"],
                engine=row["engine"],
                vendor_region=row["vendor_region"],
                llm_kind=row["llm_kind"],
            )
        )
    return docs
