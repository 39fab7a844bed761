"""Exception hierarchy shared by every module."""


class RealkitError(Exception):
    """Base class for all errors raised by realkit."""


class VocabularyMismatch(RealkitError, ValueError):
    """Two values over different vocabularies were combined."""


class ParseError(RealkitError, ValueError):
    """Malformed interpretation token, formula or knowledge-base file."""


class GuardExceeded(RealkitError):
    """An exhaustive procedure was asked to run beyond its size guard."""
