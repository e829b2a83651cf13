"""Comparison-group specs: how GroupLabels map onto classification classes.

Each spec maps a GroupLabel to a class name, or None to drop the document
from that comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .corpus import GroupLabel


@dataclass(frozen=True)
class GroupingSpec:
    name: str
    assign: Callable[[GroupLabel], Optional[str]]
    multiclass: bool = False


def _ocn_mts(g):
    if g.origin == "OCN":
        return "OCN"
    if g.origin in {"NMT", "LLM"}:
        return "MT"
    return None


def _ocn_nmts(g):
    return {"OCN": "OCN", "NMT": "NMT"}.get(g.origin)


def _ocn_llms(g):
    return {"OCN": "OCN", "LLM": "LLM"}.get(g.origin)


def _llms_nmts(g):
    return {"LLM": "LLM", "NMT": "NMT"}.get(g.origin)


def _nmt_intra(g):
    return g.engine if g.origin == "NMT" else None


def _llm_intra(g):
    return g.engine if g.origin == "LLM" else None


def _specific_generic(g):
    if g.origin == "LLM" and g.llm_kind in {"TranslationSpecific", "Generic"}:
        return g.llm_kind
    return None


def _china_foreign(g):
    if g.origin == "LLM" and g.vendor_region in {"China", "Foreign"}:
        return g.vendor_region
    return None


GROUPINGS: dict[str, GroupingSpec] = {
    spec.name: spec
    for spec in (
        GroupingSpec("ocn-mts", _ocn_mts),
        GroupingSpec("ocn-nmts", _ocn_nmts),
        GroupingSpec("ocn-llms", _ocn_llms),
        GroupingSpec("llms-nmts", _llms_nmts),
        GroupingSpec("nmt-intra", _nmt_intra, multiclass=True),
        GroupingSpec("llm-intra", _llm_intra, multiclass=True),
        GroupingSpec("specific-generic", _specific_generic),
        GroupingSpec("china-foreign", _china_foreign),
    )
}


def engine_code(g: GroupLabel) -> str | None:
    """Code used on the pairwise heatmap axes; originals pool under their
    origin label."""
    if g.origin in {"NMT", "LLM"}:
        return g.engine
    if g.origin == "OCN":
        return "OCN"
    return None
