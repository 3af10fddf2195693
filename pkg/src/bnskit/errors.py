"""Exception hierarchy shared by the whole package.

The split matters to the command line driver: parse problems exit with 1,
violated mathematical preconditions exit with 2.
"""

from __future__ import annotations


class BnsError(Exception):
    """Base class for every error raised by this package."""


class InputError(BnsError):
    """Malformed value handed to a library function (bad label, wrong basis...)."""


class DomainError(BnsError):
    """Value outside the mathematical domain of an operation (zero character...)."""


class PreconditionError(BnsError):
    """A stated hypothesis does not hold (non-commuting generators, bad n...)."""


class ParseError(BnsError):
    """Text input that does not parse.  Carries a 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message
