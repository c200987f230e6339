"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class ConsensusLabError(Exception):
    """Base class for all errors raised by consensus_lab."""


class DomainError(ConsensusLabError, ValueError):
    """Arguments range over incompatible candidate or vertex sets."""


class FormatError(ConsensusLabError, ValueError):
    """A text file could not be parsed.

    ``line`` is the 1-based line number of the offending line, or ``None``
    when the problem is not tied to a single line.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SizeLimitExceeded(ConsensusLabError):
    """An exact search would exceed the configured size limit."""


class PreconditionError(ConsensusLabError, ValueError):
    """An instance violates a structural precondition of the operation.

    Kept distinct from a plain "no" answer: e.g. asking a restriction
    question about a set that is not a minimal cover at all.
    """
