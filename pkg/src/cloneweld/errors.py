"""Exception types raised by the analysis and rewriting pipeline.

Every error that can terminate the processing of a clone pair carries a
human-readable diagnostic and, where known, a source location; the
classifier turns them into verdicts instead of letting them escape.
"""

from __future__ import annotations


class CloneweldError(Exception):
    """Base class for all pipeline errors."""

    def __init__(self, message: str, location: str | None = None):
        self.message = message
        self.location = location
        super().__init__(f"{message} ({location})" if location else message)


class ParseError(CloneweldError):
    """Source text could not be parsed."""


class EmptyFragment(CloneweldError):
    """No whole statement lies inside the requested line range."""


class UnsupportedConstruct(CloneweldError):
    """Construct outside the supported statement grammar (goto, labels, ...)."""


class NoMatchingStatements(CloneweldError):
    """Statement mapping found no matching top-level statements."""


class TypeMismatch(CloneweldError):
    """A parameter type could not be determined or reconciled."""


class UnresolvedType(CloneweldError):
    """A declared type is unknown to the type hierarchy."""


class RefOutNotAllowed(CloneweldError):
    """A required by-reference parameter cannot be introduced."""


class InstanceMethodCall(CloneweldError):
    """Shared statements invoke a method unreachable from the subroutine."""


class IteratorOrAsyncContext(CloneweldError):
    """Fragment sits in an iterator or asynchronous method."""


class MalformedReport(CloneweldError):
    """Clone detector report could not be interpreted."""


class StaleFile(CloneweldError):
    """File content changed between planning and applying edits."""


class IoError(CloneweldError):
    """Filesystem error while applying edits."""
