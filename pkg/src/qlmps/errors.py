"""Exception types raised by qlmps."""

from __future__ import annotations


class QlmpsError(Exception):
    """Base class for all library errors."""


class DimensionError(QlmpsError, ValueError):
    """Shapes or site counts are incompatible."""


class ValidationError(QlmpsError, ValueError):
    """A numerical invariant (Hermiticity, trace, normalization) does not hold."""


class SiteRangeError(QlmpsError, IndexError):
    """A site beyond the last explicit site of a finite family was requested."""


class ResourceError(QlmpsError):
    """A dense construction would exceed the configured amplitude cap."""


class UnsupportedFormError(QlmpsError, TypeError):
    """The requested route cannot handle the observable's form."""


class FormatError(QlmpsError, ValueError):
    """A JSON document does not match the expected schema."""
