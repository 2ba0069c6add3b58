"""
Exception types raised by the engine.

Absence of an inverse is never an exception; operations return a report
with a reason instead. These types cover misuse and broken invariants.
"""

from __future__ import annotations


class GeninvError(Exception):
    """Base class for every error raised on purpose by the engine."""


class StructuralError(GeninvError, ValueError):
    """Operands do not fit together (ring mismatch, side mismatch, bad encoding)."""


class ConstraintShapeError(StructuralError):
    """An ideal constraint bundle matches none of the supported shapes."""


class UnsupportedInvolutionError(GeninvError, RuntimeError):
    """A *-operation was requested on a ring without involution."""

    def __init__(self, ring_label: str, what: str = "involution") -> None:
        super().__init__(f"{what} requires an involution; ring {ring_label} has none")
        self.ring_label = ring_label


class NotEnumerableError(GeninvError, RuntimeError):
    """Enumeration requested on an infinite ring or beyond the configured cap."""


class PreconditionError(GeninvError, ValueError):
    """A mathematical hypothesis of the operation does not hold."""


class UndecidableError(GeninvError, RuntimeError):
    """No decision procedure is available for the backend."""


class InternalVerificationError(GeninvError, RuntimeError):
    """A constructed answer failed its own defining equations."""
