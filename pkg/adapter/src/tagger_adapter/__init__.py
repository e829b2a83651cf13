"""Bridge external Chinese taggers to the column-based corpus format."""

from .backends import BuiltinBackend, LTPBackend, TaggerBackend, load_backend
from .cleaning import CleaningRules, clean_text
from .documents import RawDocument, load_metadata
from .errors import AdapterError, BackendUnavailable, TaggingFailure, ValidationError
from .tagging import TaggingReport, tag_corpus, tag_document, write_outputs

__version__ = "0.1.0"

__all__ = [
    "AdapterError",
    "BackendUnavailable",
    "BuiltinBackend",
    "CleaningRules",
    "LTPBackend",
    "RawDocument",
    "TaggerBackend",
    "TaggingFailure",
    "TaggingReport",
    "ValidationError",
    "clean_text",
    "load_backend",
    "load_metadata",
    "tag_corpus",
    "tag_document",
    "write_outputs",
    "__version__",
]
