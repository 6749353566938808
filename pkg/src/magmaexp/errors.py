"""Exceptions shared across the package."""


class InvariantError(RuntimeError):
    """An internal identity that must hold exactly failed to hold.

    Raised instead of ``assert`` so the check survives ``python -O``.
    Seeing one of these means a bug, never bad user input.
    """


class BoundExceededError(RuntimeError):
    """A request went past a configured resource bound (factoring, tree budgets)."""
