"""
Forward-mode jets over exact rationals.

A Jet2 carries a value and its two partial derivatives with respect to the
seeded variables x and y. Evaluating a rational map on seeded jets yields its
exact Jacobian.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence, Union

from quivermaps.schema import Point

JetLike = Union["Jet2", Fraction, int]


@dataclass(frozen=True)
class Jet2:
    value: Fraction
    d1: Fraction = Fraction(0)
    d2: Fraction = Fraction(0)

    @staticmethod
    def _coerce(other: JetLike) -> "Jet2":
        if isinstance(other, Jet2):
            return other
        return Jet2(Fraction(other))

    @classmethod
    def constant(cls, value: Union[Fraction, int]) -> "Jet2":
        return cls(Fraction(value))

    def __add__(self, other: JetLike) -> "Jet2":
        o = Jet2._coerce(other)
        return Jet2(self.value + o.value, self.d1 + o.d1, self.d2 + o.d2)

    __radd__ = __add__

    def __sub__(self, other: JetLike) -> "Jet2":
        o = Jet2._coerce(other)
        return Jet2(self.value - o.value, self.d1 - o.d1, self.d2 - o.d2)

    def __rsub__(self, other: JetLike) -> "Jet2":
        return Jet2._coerce(other).__sub__(self)

    def __mul__(self, other: JetLike) -> "Jet2":
        o = Jet2._coerce(other)
        return Jet2(
            self.value * o.value,
            self.d1 * o.value + self.value * o.d1,
            self.d2 * o.value + self.value * o.d2,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: JetLike) -> "Jet2":
        o = Jet2._coerce(other)
        if o.value == 0:
            raise ZeroDivisionError("Jet2 division by zero")
        den = o.value * o.value
        return Jet2(
            self.value / o.value,
            (self.d1 * o.value - self.value * o.d1) / den,
            (self.d2 * o.value - self.value * o.d2) / den,
        )

    def __rtruediv__(self, other: JetLike) -> "Jet2":
        return Jet2._coerce(other).__truediv__(self)

    def __neg__(self) -> "Jet2":
        return Jet2(-self.value, -self.d1, -self.d2)

    def __pos__(self) -> "Jet2":
        return self

    def __pow__(self, power: int) -> "Jet2":
        if not isinstance(power, int):
            raise TypeError("Jet2 supports integer powers only")
        if power < 0:
            return 1 / (self ** -power)
        result = Jet2(Fraction(1))
        for _ in range(power):
            result = result * self
        return result

    @property
    def gradient(self) -> tuple[Fraction, Fraction]:
        return (self.d1, self.d2)


def seed(p: Point) -> tuple[Jet2, Jet2]:
    if p.arity != 2:
        raise ValueError(f"jets are seeded on planar points, got arity {p.arity}")
    return (Jet2(p[0], Fraction(1), Fraction(0)), Jet2(p[1], Fraction(0), Fraction(1)))


def jet_eval(f: Callable[..., object], p: Point) -> tuple[Jet2, Jet2]:
    """
    Evaluate f(x, y) on seeded jets.

    f may return a pair (a planar map) or a single value (a scalar function);
    in the scalar case the second jet is the zero constant.
    """
    x, y = seed(p)
    out = f(x, y)
    if isinstance(out, Sequence) and not isinstance(out, str):
        first, second = out
        return (Jet2._coerce(first), Jet2._coerce(second))
    return (Jet2._coerce(out), Jet2.constant(0))


def jacobian(f: Callable[..., object], p: Point) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
    first, second = jet_eval(f, p)
    return (first.gradient, second.gradient)


def jacobian_det(f: Callable[..., object], p: Point) -> Fraction:
    (a, b), (c, d) = jacobian(f, p)
    return a * d - b * c
