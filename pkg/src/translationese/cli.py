"""Command-line surface: ingest, extract, select, classify, cluster,
contrast, report.

Every command reads one declarative JSON config (``--config``, or the
``TRANSLATIONESE_CONFIG`` environment variable); ``--seed``/``--out``/
``--jobs`` flags override config values.  All artifacts embed the resolved
config digest, and downstream commands verify upstream artifacts against
their manifests before touching them.

Exit codes: 0 success, 1 validation error, 2 data error, 3 internal error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

import numpy as np

from .cluster import cluster_and_score
from .config import (
    ALL_GROUPINGS,
    CONFIG_ENV_VAR,
    FEATURE_LEVELS,
    RunConfig,
    canonical_json,
    default_tagset_path,
    load_manifest,
    sha256_file,
    verify_artifact,
    write_manifest,
)
from .corpus import Corpus, corpus_stats, load_tagset, parse_corpus_file
from .errors import DataError, GroupEmpty, ToolkitError, ValidationError
from .evaluation import (
    EvaluationProtocol,
    assign_classes,
    evaluate_arrays,
    pairwise_heatmap,
)
from .features.extractor import FeatureExtractor, FeatureMatrix, layer_of
from .features.posgrams import build_reference_profile
from .groupings import GROUPINGS
from .resources import (
    KIND_CONCRETENESS,
    KIND_FREQUENCY,
    load_lexicon,
    load_profile,
    save_profile,
)
from .selection import chi2_rank, select_top_k, selection_to_csv, selection_to_json, shared_top_features
from .stats import contrast_feature
from .svg import boxplot_svg, heatmap_svg, scatter_svg

log = logging.getLogger("translationese")

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_DATA = 2
EXIT_INTERNAL = 3


# --- plumbing -------------------------------------------------------------

def _digest_comment(cfg: RunConfig) -> str:
    return f"#config={cfg.digest()}\n"


def _write_csv(path: Path, cfg: RunConfig, body: str) -> None:
    path.write_text(_digest_comment(cfg) + body, encoding="utf-8")


def _write_json(path: Path, cfg: RunConfig, payload: dict) -> None:
    payload = {"config_digest": cfg.digest(), **payload}
    path.write_text(
        json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n",
        encoding="utf-8",
    )


def _write_svg(path: Path, cfg: RunConfig, body: str) -> None:
    path.write_text(f"<!-- config:{cfg.digest()} -->\n" + body, encoding="utf-8")


def _load_config(args) -> RunConfig:
    path = args.config or os.environ.get(CONFIG_ENV_VAR)
    cfg = RunConfig.from_file(path) if path else RunConfig()
    if args.seed is not None:
        cfg.seed = args.seed
    if args.out is not None:
        cfg.out = args.out
    if getattr(args, "jobs", None) is not None:
        cfg.jobs = args.jobs
    return cfg


def _out_dir(cfg: RunConfig) -> Path:
    out = Path(cfg.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _load_corpus(cfg: RunConfig) -> tuple[Corpus, object]:
    tagset = load_tagset(cfg.tagset or default_tagset_path())
    docs: list = []
    warnings: list[str] = []
    for path in cfg.corpus:
        part = parse_corpus_file(path, tagset)
        docs.extend(part.documents)
        warnings.extend(part.warnings)
    corpus = Corpus(tuple(docs), tagset.tagset_id, tuple(warnings))
    for w in warnings:
        log.warning("%s", w)
    return corpus, tagset


def _input_digests(cfg: RunConfig) -> dict[str, str]:
    digests = {}
    for p in cfg.corpus:
        digests[p] = sha256_file(p)
    for p in (
        cfg.tagset or str(default_tagset_path()),
        cfg.freq_lexicon,
        cfg.conc_lexicon,
        cfg.reference_corpus,
        cfg.reference_profile,
    ):
        if p and Path(p).is_file():
            digests[p] = sha256_file(p)
    return digests


def _applicable_groupings(cfg: RunConfig, matrix: FeatureMatrix) -> list[str]:
    names = []
    for name in cfg.groupings:
        spec = GROUPINGS[name]
        try:
            assign_classes(matrix, spec)
        except GroupEmpty:
            if set(cfg.groupings) != set(ALL_GROUPINGS):
                raise  # explicitly requested grouping must resolve
            log.warning("grouping %s not applicable to this corpus; skipped", name)
            continue
        names.append(name)
    return names


def _level_features(matrix: FeatureMatrix, level: str) -> tuple[str, ...]:
    if level == "all":
        return matrix.feature_names
    return tuple(n for n in matrix.feature_names if layer_of(n) == level)


def _load_matrix(cfg: RunConfig, out: Path) -> FeatureMatrix:
    path = verify_artifact(out, "extract", "features.csv")
    meta_path = out / "engine_meta.json"
    engine_meta = None
    if meta_path.is_file():
        raw = json.loads(meta_path.read_text(encoding="utf-8"))
        engine_meta = {k: tuple(v) for k, v in raw.get("engines", {}).items()}
    return FeatureMatrix.load_csv(path, engine_meta)


def _safe_name(name: str) -> str:
    return "".join(c if c.isalnum() or c in "-_" else "_" for c in name)


# --- commands -------------------------------------------------------------

def cmd_ingest(cfg: RunConfig) -> int:
    cfg.validate()
    out = _out_dir(cfg)
    corpus, _ = _load_corpus(cfg)
    rows = corpus_stats(corpus)
    lines = ["origin,engine,texts,tokens,types"]
    for r in rows:
        lines.append(f"{r.origin},{r.engine},{r.texts},{r.tokens},{r.types}")
    _write_csv(out / "corpus_stats.csv", cfg, "\n".join(lines) + "\n")
    write_manifest(out, "ingest", cfg, _input_digests(cfg), ["corpus_stats.csv"])
    print(f"{'origin':8} {'engine':8} {'texts':>7} {'tokens':>10} {'types':>8}")
    for r in rows:
        print(f"{r.origin:8} {r.engine:8} {r.texts:7d} {r.tokens:10d} {r.types:8d}")
    if corpus.warnings:
        print(f"{len(corpus.warnings)} parse warnings (see log)")
    return EXIT_OK


def cmd_extract(cfg: RunConfig) -> int:
    cfg.validate()
    if not cfg.freq_lexicon or not cfg.conc_lexicon:
        raise ValidationError("extract requires freq_lexicon and conc_lexicon paths")
    out = _out_dir(cfg)
    corpus, tagset = _load_corpus(cfg)
    freq = load_lexicon(cfg.freq_lexicon, KIND_FREQUENCY)
    conc = load_lexicon(cfg.conc_lexicon, KIND_CONCRETENESS)

    if cfg.reference_profile:
        profile = load_profile(cfg.reference_profile, expect_tagset_id=tagset.tagset_id)
    elif cfg.reference_corpus:
        ref_corpus = parse_corpus_file(cfg.reference_corpus, tagset)
        profile = build_reference_profile(ref_corpus)
        save_profile(profile, out / "reference_profile.json")
    else:
        log.warning(
            "no reference corpus or profile configured; using the target "
            "corpus itself as the n-gram reference"
        )
        profile = build_reference_profile(corpus)
        save_profile(profile, out / "reference_profile.json")

    extractor = FeatureExtractor(tagset, freq, conc, profile, cfg.npos_sizes)
    matrix = extractor.fit_transform(corpus)
    _write_csv(out / "features.csv", cfg, matrix.to_csv())

    engines: dict[str, list[str]] = {}
    for g in matrix.groups:
        if g.engine:
            engines[g.engine] = [g.vendor_region, g.llm_kind]
    _write_json(out / "engine_meta.json", cfg, {"engines": engines})

    artifacts = ["features.csv", "engine_meta.json"]
    if (out / "reference_profile.json").is_file():
        artifacts.append("reference_profile.json")
    write_manifest(out, "extract", cfg, _input_digests(cfg), artifacts)

    counts = extractor.inventory_.layer_counts()
    for layer, count in counts.items():
        print(f"{layer:16} {count:4d} features")
    print(f"{'total':16} {sum(counts.values()):4d} features")
    return EXIT_OK


def cmd_select(cfg: RunConfig) -> int:
    cfg.validate(need_corpus=False)
    out = _out_dir(cfg)
    matrix = _load_matrix(cfg, out)
    artifacts = []
    for name in _applicable_groupings(cfg, matrix):
        spec = GROUPINGS[name]
        mask, y = assign_classes(matrix, spec)
        sub = matrix.select_docs(mask)
        for level in cfg.levels:
            feats = _level_features(matrix, level)
            if not feats:
                continue
            result = select_top_k(
                chi2_rank(sub.select_features(feats), y, bins=cfg.bins), cfg.k
            )
            stem = f"selection_{name}_{level}"
            _write_csv(out / f"{stem}.csv", cfg, selection_to_csv(result))
            _write_json(out / f"{stem}.json", cfg, selection_to_json(result))
            artifacts += [f"{stem}.csv", f"{stem}.json"]
            print(f"{name:18} {level:16} top: {', '.join(result.retained[:5])} ...")
    write_manifest(out, "select", cfg, _input_digests(cfg), artifacts)
    return EXIT_OK


def cmd_classify(cfg: RunConfig) -> int:
    cfg.validate(need_corpus=False)
    out = _out_dir(cfg)
    matrix = _load_matrix(cfg, out)
    protocol = EvaluationProtocol(folds=cfg.folds, seed=cfg.seed)

    summary = ["level,grouping,acc_avg,f1_avg,c_over_t," + ",".join(
        f"acc_{k}" for k in ("naive_bayes", "logistic_regression", "linear_svm",
                             "decision_tree", "random_forest")
    )]
    reports = []
    for name in _applicable_groupings(cfg, matrix):
        spec = GROUPINGS[name]
        mask, y = assign_classes(matrix, spec)
        sub = matrix.select_docs(mask)
        for level in cfg.levels:
            feats = _level_features(matrix, level)
            if not feats:
                continue
            selection = select_top_k(
                chi2_rank(sub.select_features(feats), y, bins=cfg.bins), cfg.k
            )
            level_sub = sub.select_features(selection.retained)
            report = evaluate_arrays(
                level_sub.values, y, protocol, grouping_name=name
            )
            mean_correct = float(np.mean([s.correct for s in report.per_classifier]))
            total = report.per_classifier[0].total
            summary.append(
                f"{level},{name},{report.acc_avg:.6f},{report.f1_avg:.6f},"
                f"{round(mean_correct)}/{total},"
                + ",".join(f"{s.acc:.6f}" for s in report.per_classifier)
            )
            reports.append({"level": level, **report.to_json()})
            print(
                f"{name:18} {level:16} ACC_avg={report.acc_avg:.4f} "
                f"F1_avg={report.f1_avg:.4f} C/T={round(mean_correct)}/{total}"
            )

    _write_csv(out / "classify_summary.csv", cfg, "\n".join(summary) + "\n")
    _write_json(out / "classify_report.json", cfg, {"runs": reports})
    artifacts = ["classify_summary.csv", "classify_report.json"]

    if cfg.heatmap:
        try:
            grid = pairwise_heatmap(matrix, protocol, top_k=cfg.k, bins=cfg.bins)
        except DataError as exc:
            log.warning("pairwise heatmap skipped: %s", exc)
        else:
            _write_json(out / "heatmap.json", cfg, grid.to_json())
            _write_svg(out / "heatmap.svg", cfg, heatmap_svg(grid.codes, grid.acc))
            artifacts += ["heatmap.json", "heatmap.svg"]

    write_manifest(out, "classify", cfg, _input_digests(cfg), artifacts)
    return EXIT_OK


_CLUSTER_PAIRS = ("ocn-nmts", "ocn-llms", "llms-nmts")


def cmd_cluster(cfg: RunConfig) -> int:
    cfg.validate(need_corpus=False)
    out = _out_dir(cfg)
    matrix = _load_matrix(cfg, out)

    selections = []
    for name in _CLUSTER_PAIRS:
        spec = GROUPINGS[name]
        try:
            mask, y = assign_classes(matrix, spec)
        except GroupEmpty:
            continue
        sub = matrix.select_docs(mask)
        selections.append(
            select_top_k(chi2_rank(sub, y, bins=cfg.bins), cfg.k)
        )
    if len(selections) < 2:
        raise DataError(
            "clustering needs at least two of the OCN/NMT/LLM pairwise "
            "comparisons to be applicable"
        )
    shared = shared_top_features(selections)

    report = cluster_and_score(
        matrix,
        shared,
        k=cfg.kmeans_k,
        seed=cfg.seed,
        max_iter=cfg.kmeans_max_iter,
        restarts=cfg.kmeans_restarts,
    )
    _write_csv(out / "cluster.csv", cfg, report.to_csv())
    _write_json(
        out / "cluster.json", cfg,
        {**report.to_json(), "shared_features": list(shared)},
    )
    _write_svg(
        out / "cluster.svg", cfg,
        scatter_svg(report.coords, report.assignments, report.true_labels),
    )
    write_manifest(
        out, "cluster", cfg, _input_digests(cfg),
        ["cluster.csv", "cluster.json", "cluster.svg"],
    )
    print(f"{len(shared)} shared features, ARI={report.ari:.4f}")
    return EXIT_OK


def cmd_contrast(cfg: RunConfig) -> int:
    cfg.validate(need_corpus=False)
    out = _out_dir(cfg)
    matrix = _load_matrix(cfg, out)
    artifacts = []
    for name in _applicable_groupings(cfg, matrix):
        spec = GROUPINGS[name]
        mask, y = assign_classes(matrix, spec)
        sub = matrix.select_docs(mask)
        selection = select_top_k(
            chi2_rank(sub, y, bins=cfg.bins), cfg.contrast_top
        )
        lines = ["feature,test,statistic,p," + ",".join(
            f"{c}_{s}" for c in sorted(set(y)) for s in ("n", "mean", "median", "std")
        )]
        for feature in selection.retained:
            res = contrast_feature(matrix, feature, spec)
            cells = []
            for g in res.groups:
                cells += [str(g.n), repr(g.mean), repr(g.median), repr(g.std)]
            lines.append(
                f"{feature},{res.test},{res.statistic!r},{res.p_value!r},"
                + ",".join(cells)
            )
            svg_name = f"box_{name}_{_safe_name(feature)}.svg"
            col = sub.values[:, sub.feature_names.index(feature)]
            named = [
                (cls, col[np.array([cls == yy for yy in y])])
                for cls in sorted(set(y))
            ]
            _write_svg(
                out / svg_name, cfg,
                boxplot_svg(feature, named, res.test, res.statistic, res.p_value),
            )
            artifacts.append(svg_name)
        csv_name = f"contrast_{name}.csv"
        _write_csv(out / csv_name, cfg, "\n".join(lines) + "\n")
        artifacts.append(csv_name)
        print(f"{name}: {len(selection.retained)} features contrasted")
    write_manifest(out, "contrast", cfg, _input_digests(cfg), artifacts)
    return EXIT_OK


def _report_csv_table(path: Path) -> str:
    lines = [
        l for l in path.read_text(encoding="utf-8").splitlines()
        if l and not l.startswith("#")
    ]
    if not lines:
        return "_empty_\n"
    out = []
    for i, line in enumerate(lines):
        out.append("| " + " | ".join(line.split(",")) + " |")
        if i == 0:
            out.append("|" + "---|" * (line.count(",") + 1))
    return "\n".join(out) + "\n"


def cmd_report(cfg: RunConfig) -> int:
    out = _out_dir(cfg)
    sections: list[str] = ["# Run report\n"]

    def manifest_or_none(command):
        try:
            return load_manifest(out, command)
        except ToolkitError:
            return None

    any_manifest = False
    for command, title, tables in (
        ("ingest", "Corpus", ["corpus_stats.csv"]),
        ("extract", "Feature extraction", []),
        ("select", "Feature selection", []),
        ("classify", "Classification", ["classify_summary.csv"]),
        ("cluster", "Clustering", ["cluster.csv"]),
        ("contrast", "Feature contrasts", []),
    ):
        sections.append(f"## {title}\n")
        manifest = manifest_or_none(command)
        if manifest is None:
            sections.append("_not run_\n")
            continue
        any_manifest = True
        sections.append(f"config digest: `{manifest['config_digest']}`\n")
        for name in sorted(manifest.get("artifacts", {})):
            if name.endswith(".svg"):
                sections.append(f"![{name}]({name})\n")
        for table in tables:
            if (out / table).is_file():
                sections.append(_report_csv_table(out / table))
        if command == "select":
            names = sorted(manifest.get("artifacts", {}))
            csvs = [n for n in names if n.endswith(".csv")]
            sections.append(
                "selections: " + (", ".join(f"`{n}`" for n in csvs) or "none") + "\n"
            )
        if command == "cluster" and (out / "cluster.json").is_file():
            payload = json.loads((out / "cluster.json").read_text(encoding="utf-8"))
            sections.append(f"ARI: **{payload['ari']:.4f}**\n")
    if not any_manifest:
        raise ValidationError(f"no manifests found in {out}")

    (out / "report.md").write_text("\n".join(sections), encoding="utf-8")
    print(f"report written to {out / 'report.md'}")
    return EXIT_OK


# --- entry point ----------------------------------------------------------

COMMANDS = {
    "ingest": cmd_ingest,
    "extract": cmd_extract,
    "select": cmd_select,
    "classify": cmd_classify,
    "cluster": cmd_cluster,
    "contrast": cmd_contrast,
    "report": cmd_report,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="translationese",
        description="Corpus analytics for machine-translation style detection",
    )
    parser.add_argument("--config", help="path to the JSON run config")
    parser.add_argument("--seed", type=int, help="master random seed override")
    parser.add_argument("--out", help="output directory override")
    parser.add_argument("--jobs", type=int, help="worker count override")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        cfg = _load_config(args)
        return COMMANDS[args.command](cfg)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except DataError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ToolkitError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
