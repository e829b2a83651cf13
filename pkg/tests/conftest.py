import json

import pytest

import helpers
import synth
from translationese.corpus import serialize_corpus


def pytest_terminal_summary(terminalreporter):
    if helpers.ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in helpers.ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def small_run(tmp_path_factory):
    """One small end-to-end CLI run shared by the CLI tests."""
    from translationese import cli

    root = tmp_path_factory.mktemp("cli-run")
    corpus_path = root / "corpus.txt"
    ref_path = root / "reference.txt"
    freq_path = root / "freq.tsv"
    conc_path = root / "conc.tsv"
    out = root / "run"

    corpus_path.write_text(
        serialize_corpus(synth.planted_corpus(seed=0, docs_per_group=12, n_sents=6)),
        encoding="utf-8",
    )
    ref_path.write_text(
        serialize_corpus(synth.planted_reference(seed=1, n_docs=5, n_sents=6)),
        encoding="utf-8",
    )
    freq_path.write_text(synth.lexicon_text(seed=2), encoding="utf-8")
    conc_path.write_text(synth.lexicon_text(seed=3, low=1, high=5), encoding="utf-8")

    config = {
        "corpus": [str(corpus_path)],
        "freq_lexicon": str(freq_path),
        "conc_lexicon": str(conc_path),
        "reference_corpus": str(ref_path),
        "groupings": ["ocn-mts", "llms-nmts"],
        "levels": ["all"],
        "folds": 5,
        "seed": 0,
        "k": 10,
        "contrast_top": 2,
        "out": str(out),
    }
    config_path = root / "config.json"
    config_path.write_text(json.dumps(config), encoding="utf-8")

    codes = {}
    for command in (
        "ingest", "extract", "select", "classify", "cluster", "contrast",
        "report",
    ):
        codes[command] = cli.main(["--config", str(config_path), command])

    return {
        "root": root,
        "out": out,
        "config_path": config_path,
        "config": config,
        "codes": codes,
    }
