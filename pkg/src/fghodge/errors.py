"""Exception hierarchy shared across the package.

The CLI maps these onto its exit-code contract: usage/configuration
problems exit 2, failed mathematical checks exit 1, resource guards exit 3.
"""

from __future__ import annotations


class FghodgeError(Exception):
    """Base class for all package errors."""


class ConfigurationError(FghodgeError):
    """Invalid type/rank combination or malformed configuration input."""


class UsageError(FghodgeError):
    """Operation called with arguments outside its contract."""


class UnsupportedRepresentationError(UsageError):
    """Requested a concrete matrix model that is deliberately not built."""


class IntegrityError(FghodgeError):
    """An internal invariant failed; indicates a bug, not bad user input."""


class ResourceLimitError(FghodgeError):
    """A configurable resource guard (rank, dimension) was exceeded."""
