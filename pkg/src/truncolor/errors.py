"""Shared exception types."""

from __future__ import annotations

__all__ = ["GraphError", "UndecidedError"]


class GraphError(ValueError):
    """Domain or precondition violation on graph-shaped input."""


class UndecidedError(RuntimeError):
    """An exact search ran out of its node budget before deciding.

    Carries the number of search nodes spent so callers can report it.
    """

    def __init__(self, message: str, nodes: int = 0):
        super().__init__(message)
        self.nodes = nodes
