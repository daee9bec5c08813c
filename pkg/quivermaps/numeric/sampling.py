"""Seeded random rationals for property checks."""

from __future__ import annotations

import random
from fractions import Fraction

from quivermaps.schema import Point


def random_scalar(rng: random.Random, height: int = 100) -> Fraction:
    """Numerator and denominator drawn uniformly from 1..height."""
    return Fraction(rng.randint(1, height), rng.randint(1, height))


def random_point(rng: random.Random, arity: int, height: int = 100) -> Point:
    return Point.of(*(random_scalar(rng, height) for _ in range(arity)))


def random_pair_off_base(rng: random.Random, height: int = 100) -> tuple[Fraction, Fraction]:
    """Random (a, b) != (1, 1)."""
    while True:
        a, b = random_scalar(rng, height), random_scalar(rng, height)
        if (a, b) != (1, 1):
            return a, b


def random_square_pair(rng: random.Random, height: int = 10) -> tuple[Fraction, Fraction]:
    """(a, b) with a*b and a/b both rational squares: a = r*s, b = s/r."""
    r, s = random_scalar(rng, height), random_scalar(rng, height)
    return r * s, s / r
