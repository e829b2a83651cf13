"""Command line interface: ``tagger-adapter tag ...``."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .backends import load_backend
from .cleaning import CleaningRules
from .documents import load_metadata, raw_documents_from_files
from .errors import AdapterError, BackendUnavailable, ValidationError
from .tagging import tag_corpus, write_outputs

log = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tagger-adapter")
    sub = parser.add_subparsers(dest="command", required=True)

    tag = sub.add_parser("tag", help="tag raw text files into the corpus format")
    tag.add_argument("inputs", nargs="+", type=Path, help="raw UTF-8 text files")
    tag.add_argument("--backend", default="builtin", help="tagger backend id")
    tag.add_argument("--model", default="default", help="backend model id")
    tag.add_argument(
        "--meta", required=True, type=Path,
        help="sidecar CSV: doc_id,origin,engine,vendor_region,llm_kind",
    )
    tag.add_argument("--out", required=True, type=Path, help="output directory")
    tag.add_argument(
        "--patterns", type=Path,
        help="JSON cleaning-rule file overriding the default pattern list",
    )
    tag.add_argument("--jobs", type=int, default=1, help="worker processes")
    return parser


def _run_tag(args) -> int:
    for path in args.inputs:
        if not path.is_file():
            raise ValidationError(f"input file not found: {path}")
    if not args.meta.is_file():
        raise ValidationError(f"metadata file not found: {args.meta}")
    meta = load_metadata(args.meta)
    docs = raw_documents_from_files(list(args.inputs), meta)
    rules = (
        CleaningRules.from_json(args.patterns.read_text(encoding="utf-8"))
        if args.patterns
        else CleaningRules()
    )
    backend = load_backend(args.backend, args.model)
    report = tag_corpus(docs, backend, rules, jobs=args.jobs)
    corpus_path, tagset_path = write_outputs(args.out, report, backend)
    print(
        f"tagged {len(report.tagged)} docs "
        f"({len(report.skipped)} skipped, {len(report.failed)} failed) "
        f"-> {corpus_path} + {tagset_path}"
    )
    return 0 if not report.failed else 3


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.INFO, stream=sys.stderr)
    args = build_parser().parse_args(argv)
    try:
        return _run_tag(args)
    except BackendUnavailable as exc:
        print(f"backend error: {exc}", file=sys.stderr)
        return 2
    except (AdapterError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
