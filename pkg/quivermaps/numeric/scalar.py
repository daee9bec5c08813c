"""Exact rational scalars: text parsing, formatting and perfect-square roots."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

import regex as re

from quivermaps.errors import NotPerfectSquare, ScalarParseError

Scalar = Fraction
ScalarLike = Union[Fraction, int, str]

_SCALAR_RE = re.compile(r"^\s*([+-]?[0-9]+)(?:\s*/\s*([0-9]+))?\s*$")


def parse_scalar(text: str) -> Fraction:
    """Parse `p/q` or `p` (optional sign). Non-reduced input is normalized."""
    match = _SCALAR_RE.match(text)
    if not match:
        raise ScalarParseError(f"cannot parse {text!r} as a rational")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    if den == 0:
        raise ScalarParseError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def parse_scalar_list(text: str) -> list[Fraction]:
    """Comma separated scalars, e.g. `1,1/2,3`."""
    if not text.strip():
        raise ScalarParseError("empty coordinate list")
    values = []
    for idx, part in enumerate(text.split(","), start=1):
        try:
            values.append(parse_scalar(part))
        except ScalarParseError as exc:
            raise ScalarParseError(f"coordinate x{idx}: {exc}") from exc
    return values


def format_scalar(value: Fraction) -> str:
    return str(Fraction(value))


def as_scalar(value: ScalarLike) -> Fraction:
    if isinstance(value, str):
        return parse_scalar(value)
    return Fraction(value)


def _isqrt_exact(n: int) -> int | None:
    root = math.isqrt(n)
    return root if root * root == n else None


def sqrt_exact(s: ScalarLike) -> Fraction:
    """Return r > 0 with r*r == s, or raise NotPerfectSquare."""
    value = as_scalar(s)
    if value <= 0:
        raise NotPerfectSquare(value)
    num = _isqrt_exact(value.numerator)
    den = _isqrt_exact(value.denominator)
    if num is None or den is None:
        raise NotPerfectSquare(value)
    return Fraction(num, den)


def height(value: Fraction) -> int:
    """max(|numerator|, denominator) in lowest terms."""
    return max(abs(value.numerator), value.denominator)


def bit_length(value: Fraction) -> int:
    return max(abs(value.numerator).bit_length(), value.denominator.bit_length())
