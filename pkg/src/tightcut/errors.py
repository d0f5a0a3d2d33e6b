"""Exception hierarchy shared by every module."""

from __future__ import annotations


class TightcutError(Exception):
    """Base class for all errors raised by this package."""


class GraphFormatError(TightcutError, ValueError):
    """Malformed edge-list or graph6 input."""


class DomainError(TightcutError, ValueError):
    """A precondition on the mathematical input does not hold."""


class NotMatchingCoveredError(DomainError):
    """The graph is not matching covered."""


class NotTightError(DomainError):
    """The cut is not tight; ``witness`` is a perfect matching using 2+ cut
    edges and ``pairs`` its edges as vertex pairs."""

    def __init__(self, message: str, witness=None, pairs=()):
        super().__init__(message)
        self.witness = witness
        self.pairs = [tuple(p) for p in pairs]


class InvariantError(TightcutError, RuntimeError):
    """A statement guaranteed by the theory failed to verify.

    Raised instead of returning an unverified answer.  ``details`` carries
    whatever structure was being checked so the failure can be replayed.
    """

    def __init__(self, message: str, details: dict | None = None):
        super().__init__(message)
        self.details = details or {}
