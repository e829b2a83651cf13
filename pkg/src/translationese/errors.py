"""Exception hierarchy shared by the whole toolkit.

Exit-code mapping used by the CLI: ValidationError -> 1, DataError -> 2,
anything else -> 3.
"""


class ToolkitError(Exception):
    """Base class for all toolkit errors."""


class ValidationError(ToolkitError):
    """Bad configuration, bad arguments, missing files."""


class DataError(ToolkitError):
    """The input data itself is malformed or inconsistent."""


# --- corpus parsing -------------------------------------------------------

class MalformedLine(DataError):
    def __init__(self, message: str, line_no: int):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class UnknownTag(DataError):
    def __init__(self, tag: str, kind: str, line_no: int):
        super().__init__(f"line {line_no}: unknown {kind} tag {tag!r}")
        self.tag = tag
        self.kind = kind
        self.line_no = line_no


class DanglingHead(DataError):
    def __init__(self, head: int, sentence_len: int, line_no: int):
        super().__init__(
            f"line {line_no}: head {head} out of range for sentence of "
            f"{sentence_len} tokens"
        )
        self.head = head
        self.line_no = line_no


class DuplicateDocId(DataError):
    def __init__(self, doc_id: str, line_no: int):
        super().__init__(f"line {line_no}: duplicate doc_id {doc_id!r}")
        self.doc_id = doc_id


class EmptySurface(DataError):
    """A token surface form was empty."""


class TagsetMismatch(DataError):
    """Two artifacts were produced under different tagset declarations."""


# --- features / resources -------------------------------------------------

class EmptyLexicon(DataError):
    """A lexicon resource contains no entries."""


class InsufficientCandidates(ToolkitError):
    """Fewer candidate n-grams than the requested inventory size.

    Recoverable: callers keep all candidates and warn.
    """


# --- selection / learning -------------------------------------------------

class TooFewDocs(DataError):
    """Not enough documents (or classes) for the requested operation."""


class MissingClassInTrain(DataError):
    """A class present in the evaluation data is absent from the train split."""


class NonFiniteFeature(DataError):
    """A feature matrix contains NaN or infinite values."""


class FoldTooSmall(DataError):
    """Stratified folds cannot be built for the smallest class."""


class GroupEmpty(DataError):
    """A grouping spec resolved to an empty class."""

    def __init__(self, name: str):
        super().__init__(f"grouping class {name!r} matched no documents")
        self.name = name


# --- clustering / stats ---------------------------------------------------

class KTooLarge(DataError):
    """k exceeds the number of documents."""


class SizeMismatch(DataError):
    """Two label vectors do not cover the same documents."""


class GroupTooSmall(DataError):
    """A contrast group has fewer observations than required."""


# --- cli ------------------------------------------------------------------

class MissingArtifact(DataError):
    """A required artifact file is absent from the run directory."""


class ArtifactDigestMismatch(DataError):
    """An artifact no longer matches the digest recorded in its manifest."""
