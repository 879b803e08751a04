"""
Exceptions raised by the spectral sequence engine.

Operations named ``validate`` report problems as lists and never raise; the
exceptions below are for constructors and parsers that cannot continue.
"""

from typing import Any, List, Optional


class SpectralSequenceError(Exception):
    """Base class for all engine errors."""


class RingMismatchError(SpectralSequenceError):
    """Two objects that must share a coefficient ring do not."""


class ShapeError(SpectralSequenceError):
    """A matrix does not have the shape its context requires."""


class InvalidComplexError(SpectralSequenceError):
    """A chain complex violates d∘d = 0 or has inconsistent shapes."""

    def __init__(self, message: str, degree: Optional[int] = None):
        super().__init__(message)
        self.degree = degree


class InvalidFiltrationError(SpectralSequenceError):
    """A filtered complex failed validation."""

    def __init__(self, message: str, violations: Optional[List[Any]] = None):
        super().__init__(message)
        self.violations = list(violations or [])


class SchemaError(SpectralSequenceError):
    """An interchange file does not match its schema."""

    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{path}: {message}")
        self.path = path
