"""Translatability layer: residue of the source language in the output."""

from __future__ import annotations

import logging

from ..corpus import Document, SCRIPT_LATIN, SCRIPT_PUNCT, _is_han

log = logging.getLogger(__name__)

# A sentence counts as incompletely translated when it contains a
# contiguous run of more than this many Latin-script tokens.
UNTRANSLATED_RUN_WORDS = 3


def _is_latin_char(c: str) -> bool:
    return ("a" <= c <= "z") or ("A" <= c <= "Z")


def _longest_latin_run(sent) -> int:
    best = run = 0
    for tok in sent.tokens:
        if tok.script == SCRIPT_LATIN:
            run += 1
            best = max(best, run)
        else:
            run = 0
    return best


def extract_translatability(doc: Document) -> dict[str, float]:
    sents = doc.sentences
    n_sent = len(sents)
    tokens = list(doc.tokens)
    n_tok = len(tokens)

    incomplete = sum(
        1 for s in sents if _longest_latin_run(s) > UNTRANSLATED_RUN_WORDS
    )

    latin_chars = sum(
        1 for t in tokens for c in t.surface if _is_latin_char(c)
    )
    han_chars = sum(1 for t in tokens for c in t.surface if _is_han(c))
    if han_chars == 0:
        log.warning("doc %r: no Han characters; foreignness uses denominator 1", doc.doc_id)
        foreignness = float(latin_chars)
    else:
        foreignness = latin_chars / han_chars

    def mixed_sentence(s) -> bool:
        has_han = any(_is_han(c) for t in s.tokens for c in t.surface)
        has_latin = any(_is_latin_char(c) for t in s.tokens for c in t.surface)
        return has_han and has_latin

    abbreviations = sum(
        1
        for t in tokens
        if 2 <= t.char_count <= 6
        and all("A" <= c <= "Z" for c in t.surface)
    )

    non_punct = [t for t in tokens if t.script != SCRIPT_PUNCT]

    return {
        "completeness": 1.0 - incomplete / n_sent,
        "foreignness": foreignness,
        "code_switching": sum(1 for s in sents if mixed_sentence(s)) / n_sent,
        "abbreviation": abbreviations / n_tok,
        "untranslated": (
            sum(1 for t in non_punct if t.script == SCRIPT_LATIN) / len(non_punct)
            if non_punct
            else 0.0
        ),
    }
