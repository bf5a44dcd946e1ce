"""
Exception types shared by the core modules.
"""

from typing import Optional


class MatroidKitError(Exception):
    """Base class for all library errors."""


class MatroidInputError(MatroidKitError, ValueError):
    """Malformed input: mixed widths, foreign elements, overlapping classes, bad files."""


class RefusalError(MatroidKitError):
    """
    An operation refused to run because a cap or budget would be exceeded.

    Attributes:
        limit: The cap or budget in force
        required: What the request would have needed (None when unknown)
    """

    def __init__(self, message: str, limit: Optional[int] = None, required: Optional[int] = None):
        super().__init__(message)
        self.limit = limit
        self.required = required


class ColoringError(MatroidKitError):
    """The matroid has a loop, so no finite coloring exists."""
