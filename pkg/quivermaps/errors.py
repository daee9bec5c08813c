"""Domain errors raised by quivermaps operations."""

from __future__ import annotations

from typing import Any


class QuiverMapError(ValueError):
    """Base class for every error raised by the library."""


class ScalarParseError(QuiverMapError):
    pass


class NotPerfectSquare(QuiverMapError):
    def __init__(self, value: Any) -> None:
        super().__init__(f"{value} is not the square of a rational number")
        self.value = value


class ArityMismatch(QuiverMapError):
    pass


class NonPositiveCoordinate(QuiverMapError):
    pass


class NotOnVariety(QuiverMapError):
    pass


class NotOnBaseVariety(QuiverMapError):
    pass


class NotInS(QuiverMapError):
    pass


class ClosedFormMismatch(QuiverMapError):
    """Closed form and brute iteration disagree at step ``n``."""

    def __init__(self, n: int, expected: Any, actual: Any) -> None:
        super().__init__(f"closed form mismatch at n={n}: expected={expected} actual={actual}")
        self.n = n
        self.expected = expected
        self.actual = actual
