"""Exception hierarchy shared by the exact-arithmetic kernels and the CLI."""

from __future__ import annotations

from typing import Optional


class JackVertexError(Exception):
    """Base exception raised for library failures."""


class PoleError(ZeroDivisionError, JackVertexError):
    """Raised when a rational function is evaluated at a pole or divided by zero."""


class NotPolynomialError(ValueError, JackVertexError):
    """Raised when a rational function with a non-constant denominator is read as a polynomial."""


class PartitionError(ValueError, JackVertexError):
    """Raised for malformed partitions and violated containment preconditions."""


class ResourceGuardError(RuntimeError, JackVertexError):
    """Raised when a computation would exceed a configured desk-scale bound."""

    def __init__(self, what: str, requested: int, bound: int) -> None:
        super().__init__(f"{what}={requested} exceeds configured bound {bound}")
        self.what = what
        self.requested = requested
        self.bound = bound


class IntegrityError(AssertionError, JackVertexError):
    """Raised when a cross-check that must hold against the oracle fails."""

    def __init__(self, message: str, *, case: Optional[dict] = None) -> None:
        super().__init__(message)
        self.case = case


__all__ = [
    "IntegrityError",
    "JackVertexError",
    "NotPolynomialError",
    "PartitionError",
    "PoleError",
    "ResourceGuardError",
]
