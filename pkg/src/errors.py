"""Exceptions raised by the covering toolkit."""
from typing import Optional


class CoveringError(Exception):
    """Base class for all toolkit errors."""


class ParameterError(CoveringError):
    """Invalid construction parameters, subset size or query subset."""


class StructuralError(CoveringError):
    """Construction metadata is inconsistent (overlapping bases, odd halves, ...)."""


class StructureMissingError(CoveringError):
    """Structural verification is inapplicable: the family carries no metadata."""


class ThresholdError(CoveringError):
    """Query subset is below the guarantee threshold and has no collision."""


class DesignFormatError(CoveringError):
    """Malformed design file; carries the offending line number when known."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        self.detail = message
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
