"""Exception types shared across the package."""

from __future__ import annotations


class GroupValidationError(ValueError):
    """A group description violates one of its structural invariants."""


class UnsupportedGroupError(ValueError):
    """The group does not satisfy the precondition of the requested operation."""


class NoStrongOrientationError(ValueError):
    """The graph has a bridge (or is disconnected), so no strong orientation exists."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NotApplicableError(ValueError):
    """A certificate was requested for a structural situation absent from the group."""


class ConstructionError(RuntimeError):
    """A construction produced an orientation that failed its own verification.

    This signals a bug, never bad input.
    """
