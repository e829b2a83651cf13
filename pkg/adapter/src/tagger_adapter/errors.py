"""Adapter error hierarchy."""


class AdapterError(Exception):
    """Base class for all adapter errors."""


class BackendUnavailable(AdapterError):
    """The requested tagger backend (or its model) cannot be loaded."""


class TaggingFailure(AdapterError):
    """A single document could not be tagged; the run continues."""


class ValidationError(AdapterError):
    """Bad input: metadata, configuration, or raw documents."""
