"""
Maps of the form g(x) = G(x) * D * x.

If G(g(x)) = c * G(x), then g^n(x) = c^(n(n-1)/2) * G(x)^n * D^n * x.
Every map registered here has its eigenrelation checked on seeded random
points at construction time.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from quivermaps.closed_form.constants import k_constants
from quivermaps.errors import ArityMismatch
from quivermaps.numeric.sampling import random_point
from quivermaps.schema import MapId, Point

logger = logging.getLogger(__name__)

VALIDATION_SAMPLES = 8


@dataclass(frozen=True)
class ScaledDiagonalMap:
    name: str
    diagonal: tuple[Fraction, ...]
    factor: Callable[[Point], Fraction]
    eigenvalue: Fraction

    @property
    def arity(self) -> int:
        return len(self.diagonal)

    def apply(self, x: Point) -> Point:
        if x.arity != self.arity:
            raise ArityMismatch(f"{self.name} needs arity {self.arity}, got {x.arity}")
        g = self.factor(x)
        return Point.of(*(g * d * xi for d, xi in zip(self.diagonal, x.coords)))

    __call__ = apply

    def check_eigenrelation(self, x: Point) -> bool:
        return self.factor(self.apply(x)) == self.eigenvalue * self.factor(x)


def lemma1_power(g: ScaledDiagonalMap, x: Point, n: int) -> Point:
    if n < 0:
        raise ValueError(f"power must be >= 0, got {n}")
    if x.arity != g.arity:
        raise ArityMismatch(f"{g.name} needs arity {g.arity}, got {x.arity}")
    scale = g.eigenvalue ** (n * (n - 1) // 2) * g.factor(x) ** n
    return Point.of(*(scale * d**n * xi for d, xi in zip(g.diagonal, x.coords)))


SCALED_MAPS: dict[str, ScaledDiagonalMap] = {}


def validate_scaled_map(g: ScaledDiagonalMap, samples: int = VALIDATION_SAMPLES) -> None:
    rng = random.Random(0)
    for _ in range(samples):
        x = random_point(rng, g.arity, height=20)
        if not g.check_eigenrelation(x):
            raise ValueError(f"eigenrelation fails for {g.name} at {x}")


def register_scaled_map(g: ScaledDiagonalMap) -> ScaledDiagonalMap:
    validate_scaled_map(g)
    SCALED_MAPS[g.name] = g
    logger.debug("registered scaled map name=%s eigenvalue=%s", g.name, g.eigenvalue)
    return g


def get_scaled_map(name: str) -> ScaledDiagonalMap:
    return SCALED_MAPS[name]


def _diag(*values) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


# phi restricted to C(1,1) for F0
F0_BAR = register_scaled_map(
    ScaledDiagonalMap(
        name="f0_bar",
        diagonal=_diag(1, 2, 2, 4),
        factor=lambda x: x[1] / x[0],
        eigenvalue=Fraction(2),
    )
)

# second iterate of phi restricted to C(1,1) for DP3
DP3_BAR_SQUARED = register_scaled_map(
    ScaledDiagonalMap(
        name="dp3_bar_squared",
        diagonal=_diag(1, 2, 2, 4, 4, 8),
        factor=lambda x: x[4] / x[0],
        eigenvalue=Fraction(4),
    )
)


def f0_tilde_map(a, b) -> ScaledDiagonalMap:
    """phi^4 restricted to C(a,b) for F0."""
    k = k_constants(MapId.F0, a, b)
    g = ScaledDiagonalMap(
        name=f"f0_tilde({k.a},{k.b})",
        diagonal=(k.k1, k.k2, k.k2, k.k2 * k.k2 / k.k1),
        factor=lambda x: (x[1] / x[0]) ** 4,
        eigenvalue=(k.k2 / k.k1) ** 4,
    )
    validate_scaled_map(g, samples=2)
    return g


def dp3_tilde_map(a, b) -> ScaledDiagonalMap:
    """phi^6 restricted to C(a,b) for DP3."""
    k = k_constants(MapId.DP3, a, b)
    k1, k2 = k.k1, k.k2
    g = ScaledDiagonalMap(
        name=f"dp3_tilde({k.a},{k.b})",
        diagonal=(Fraction(1), k1, k1, k1**2, k1**2, k1**3),
        factor=lambda x: k2 * (x[4] / x[0]) ** 3,
        eigenvalue=k1**6,
    )
    validate_scaled_map(g, samples=2)
    return g


def tilde_map(map_id: MapId, a, b) -> ScaledDiagonalMap:
    if map_id is MapId.F0:
        return f0_tilde_map(a, b)
    return dp3_tilde_map(a, b)
