"""Run configuration and provenance manifests.

A run is driven by one declarative JSON config; CLI flags override
config values.  The resolved config (with every default and seed made
explicit) is serialized into each manifest and its digest is embedded in
every artifact, so any output can be traced to the exact inputs and
settings that produced it.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field, asdict
from importlib import resources as importlib_resources
from pathlib import Path

from . import __version__
from .classifiers import DEFAULT_HYPERPARAMS
from .errors import ArtifactDigestMismatch, MissingArtifact, ValidationError

CONFIG_ENV_VAR = "TRANSLATIONESE_CONFIG"

ALL_GROUPINGS = (
    "ocn-mts",
    "ocn-nmts",
    "ocn-llms",
    "llms-nmts",
    "nmt-intra",
    "llm-intra",
    "specific-generic",
    "china-foreign",
)

FEATURE_LEVELS = (
    "lexical",
    "syntactical",
    "readability",
    "translatability",
    "npos",
    "all",
)


def default_tagset_path() -> Path:
    return Path(
        importlib_resources.files("translationese").joinpath(
            "data/default_tagset.txt"
        )
    )


@dataclass
class RunConfig:
    corpus: list[str] = field(default_factory=list)
    tagset: str = ""
    freq_lexicon: str = ""
    conc_lexicon: str = ""
    reference_corpus: str = ""
    reference_profile: str = ""  # cached profile; wins over reference_corpus
    npos_sizes: dict[int, int] = field(
        default_factory=lambda: {1: 10, 2: 49, 3: 60}
    )
    k: int = 30
    bins: int = 10
    folds: int = 5
    seed: int = 0
    groupings: list[str] = field(default_factory=lambda: list(ALL_GROUPINGS))
    levels: list[str] = field(default_factory=lambda: list(FEATURE_LEVELS))
    heatmap: bool = True
    kmeans_k: int = 3
    kmeans_restarts: int = 10
    kmeans_max_iter: int = 300
    contrast_top: int = 10
    out: str = "run"
    jobs: int = 1

    @classmethod
    def from_file(cls, path: str | Path) -> "RunConfig":
        try:
            raw = json.loads(Path(path).read_text(encoding="utf-8"))
        except OSError as exc:
            raise ValidationError(f"cannot read config {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ValidationError(f"config {path} is not valid JSON: {exc}") from exc
        cfg = cls()
        valid = set(cfg.__dataclass_fields__)
        for key, value in raw.items():
            if key not in valid:
                raise ValidationError(f"unknown config key {key!r}")
            setattr(cfg, key, value)
        if isinstance(cfg.corpus, str):
            cfg.corpus = [cfg.corpus]
        cfg.npos_sizes = {int(k): int(v) for k, v in dict(cfg.npos_sizes).items()}
        return cfg

    def validate(self, *, need_corpus: bool = True) -> None:
        if need_corpus:
            if not self.corpus:
                raise ValidationError("config declares no corpus paths")
            for p in self.corpus:
                if not Path(p).is_file():
                    raise ValidationError(f"corpus file not found: {p}")
        for label, p in (
            ("tagset", self.tagset),
            ("freq_lexicon", self.freq_lexicon),
            ("conc_lexicon", self.conc_lexicon),
            ("reference_corpus", self.reference_corpus),
            ("reference_profile", self.reference_profile),
        ):
            if p and not Path(p).is_file():
                raise ValidationError(f"{label} file not found: {p}")
        unknown = set(self.groupings) - set(ALL_GROUPINGS)
        if unknown:
            raise ValidationError(f"unknown groupings: {sorted(unknown)}")
        unknown = set(self.levels) - set(FEATURE_LEVELS)
        if unknown:
            raise ValidationError(f"unknown feature levels: {sorted(unknown)}")

    def resolved(self) -> dict:
        d = asdict(self)
        d["npos_sizes"] = {str(k): v for k, v in sorted(self.npos_sizes.items())}
        d["tagset"] = self.tagset or str(default_tagset_path())
        return d

    def digest(self) -> str:
        # out and jobs do not influence any computed value, so two runs
        # that differ only in output directory or parallelism share a
        # digest (and produce byte-identical artifacts).
        d = self.resolved()
        d.pop("out")
        d.pop("jobs")
        return sha256_text(canonical_json(d))


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, separators=(",", ":"))


def sha256_text(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def sha256_file(path: str | Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def write_manifest(
    out_dir: Path,
    command: str,
    config: RunConfig,
    inputs: dict[str, str],
    artifacts: list[str],
) -> Path:
    payload = {
        "toolkit_version": __version__,
        "command": command,
        "config": config.resolved(),
        "config_digest": config.digest(),
        "hyperparams": DEFAULT_HYPERPARAMS,
        "inputs": inputs,
        "artifacts": {name: sha256_file(out_dir / name) for name in artifacts},
    }
    path = out_dir / f"{command}_manifest.json"
    path.write_text(
        json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n",
        encoding="utf-8",
    )
    return path


def load_manifest(out_dir: Path, command: str) -> dict:
    path = out_dir / f"{command}_manifest.json"
    if not path.is_file():
        raise MissingArtifact(f"manifest not found: {path}")
    return json.loads(path.read_text(encoding="utf-8"))


def verify_artifact(out_dir: Path, command: str, name: str) -> Path:
    """Check an artifact against the digest its producing manifest recorded."""
    manifest = load_manifest(out_dir, command)
    recorded = manifest.get("artifacts", {}).get(name)
    if recorded is None:
        raise MissingArtifact(f"{name} is not listed in the {command} manifest")
    path = out_dir / name
    if not path.is_file():
        raise MissingArtifact(f"artifact not found: {path}")
    actual = sha256_file(path)
    if actual != recorded:
        raise ArtifactDigestMismatch(
            f"{name}: digest {actual[:12]}... does not match manifest "
            f"{recorded[:12]}...; re-run `{command}`"
        )
    return path
