"""
Closed-form orbits of phi.

On the base variety C(1,1) every step has a closed form. Off it, the closed
forms cover multiples of the period; closed_form_orbit completes the
remaining steps by direct iteration.
"""

from __future__ import annotations

import logging
from fractions import Fraction

from quivermaps.closed_form.constants import k_constants
from quivermaps.closed_form.lemma import F0_BAR, f0_tilde_map, dp3_tilde_map
from quivermaps.errors import NotOnBaseVariety, NotOnVariety
from quivermaps.maps.formulas import iterate_map, phi, project_pi
from quivermaps.maps.registry import arity_of, period_of, require_arity
from quivermaps.schema import MapId, Point

logger = logging.getLogger(__name__)

BASE = Point.of(1, 1)


def _check_steps(n: int) -> None:
    if n < 0:
        raise ValueError(f"step count must be >= 0, got {n}")


def on_base_variety(map_id: MapId, x: Point) -> bool:
    """True when pi(x) = (1, 1)."""
    return project_pi(map_id, x) == BASE


def _require_multiple(map_id: MapId, n: int) -> int:
    m = period_of(map_id)
    if n % m:
        raise NotOnBaseVariety(
            f"{map_id.value}: closed form off C(1,1) covers multiples of {m} only, got n={n}"
        )
    return n // m


# ═══════════════════════════════════════════════════════════════════
# F0
# ═══════════════════════════════════════════════════════════════════

def f0_base_orbit(x: Point, n: int) -> Point:
    """phi^n on C(1,1): 2^(n(n-1)/2) (x2/x1)^n (x1, 2^n x2, 2^n x3, 4^n x4)."""
    _check_steps(n)
    require_arity(x, 4)
    x1, x2, x3, x4 = x.coords
    scale = Fraction(2) ** (n * (n - 1) // 2) * (x2 / x1) ** n
    return Point.of(scale * x1, scale * 2**n * x2, scale * 2**n * x3, scale * 4**n * x4)


def f0_block_orbit(x: Point, n: int) -> Point:
    """phi^n on C(a,b) for n a multiple of 4, with (a,b) = pi(x)."""
    _check_steps(n)
    require_arity(x, 4)
    blocks = _require_multiple(MapId.F0, n)
    a, b = project_pi(MapId.F0, x).coords
    k = k_constants(MapId.F0, a, b)
    k1, k2 = k.k1, k.k2
    x1, x2, x3, x4 = x.coords
    scale = (k2 / k1) ** (2 * blocks * (blocks - 1)) * (x2 / x1) ** (4 * blocks)
    return Point.of(
        scale * k1**blocks * x1,
        scale * k2**blocks * x2,
        scale * k2**blocks * x3,
        scale * k2 ** (2 * blocks) / k1**blocks * x4,
    )


def thm3_orbit(x: Point, n: int) -> Point:
    if on_base_variety(MapId.F0, x):
        return f0_base_orbit(x, n)
    return f0_block_orbit(x, n)


# ═══════════════════════════════════════════════════════════════════
# DP3
# ═══════════════════════════════════════════════════════════════════

def dp3_bar(x: Point) -> Point:
    """phi restricted to C(1,1) for DP3."""
    require_arity(x, 6)
    x1, x2, x3, x4, x5, x6 = x.coords
    return Point.of(x3, x4, x5, x6, 2 * x3 * x5 / x1, 4 * x3 * x5 * x5 / (x1 * x2))


def dp3_base_orbit(x: Point, n: int) -> Point:
    """phi^n on C(1,1), split on the parity of n with lam = 2^(m-1) x5/x1."""
    _check_steps(n)
    require_arity(x, 6)
    m, odd = divmod(n, 2)
    x1, x2, x3, x4, x5, x6 = x.coords
    lam = Fraction(2) ** (m - 1) * x5 / x1
    p2, p4, p8 = Fraction(2) ** m, Fraction(4) ** m, Fraction(8) ** m
    if not odd:
        s = lam**m
        return Point.of(s * x1, s * p2 * x2, s * p2 * x3, s * p4 * x4, s * p4 * x5, s * p8 * x6)
    s = (2 * lam) ** m
    return Point.of(
        s * x3,
        s * p2 * x4,
        s * p2 * x5,
        s * p4 * x6,
        s * p4 * 2 * x3 * x5 / x1,
        s * p8 * 4 * x3 * x5 * x5 / (x1 * x2),
    )


def dp3_block_orbit(x: Point, n: int) -> Point:
    """phi^n on C(a,b) for n a multiple of 6, with (a,b) = pi(x)."""
    _check_steps(n)
    require_arity(x, 6)
    blocks = _require_multiple(MapId.DP3, n)
    a, b = project_pi(MapId.DP3, x).coords
    k = k_constants(MapId.DP3, a, b)
    k1, k2 = k.k1, k.k2
    x1, x2, x3, x4, x5, x6 = x.coords
    scale = k1 ** (3 * blocks * (blocks - 1)) * k2**blocks * (x5 / x1) ** (3 * blocks)
    return Point.of(
        scale * x1,
        scale * k1**blocks * x2,
        scale * k1**blocks * x3,
        scale * k1 ** (2 * blocks) * x4,
        scale * k1 ** (2 * blocks) * x5,
        scale * k1 ** (3 * blocks) * x6,
    )


def thm4_orbit(x: Point, n: int) -> Point:
    if on_base_variety(MapId.DP3, x):
        return dp3_base_orbit(x, n)
    return dp3_block_orbit(x, n)


# ═══════════════════════════════════════════════════════════════════
# Generic entry points
# ═══════════════════════════════════════════════════════════════════

def theorem_orbit(map_id: MapId, x: Point, n: int) -> Point:
    if map_id is MapId.F0:
        return thm3_orbit(x, n)
    return thm4_orbit(x, n)


def block_orbit(map_id: MapId, x: Point, n: int) -> Point:
    if map_id is MapId.F0:
        return f0_block_orbit(x, n)
    return dp3_block_orbit(x, n)


def closed_form_orbit(map_id: MapId, x: Point, n: int) -> Point:
    """phi^n for any n: block formula then at most m-1 direct steps."""
    _check_steps(n)
    require_arity(x, arity_of(map_id))
    if on_base_variety(map_id, x):
        return theorem_orbit(map_id, x, n)
    m = period_of(map_id)
    blocks, rest = divmod(n, m)
    y = block_orbit(map_id, x, blocks * m)
    return iterate_map(lambda p: phi(map_id, p), y, rest)


def admissible_steps(map_id: MapId, x: Point, n_max: int) -> list[int]:
    """Step counts 1..n_max that the theorem formulas cover at x."""
    if on_base_variety(map_id, x):
        return list(range(1, n_max + 1))
    m = period_of(map_id)
    return list(range(m, n_max + 1, m))


def restricted_map(map_id: MapId, which: str, a, b, x: Point) -> Point:
    """phi on C(1,1) ("bar") or phi^m on C(a,b) ("tilde")."""
    require_arity(x, arity_of(map_id))
    label = Point.of(a, b)
    if project_pi(map_id, x) != label:
        raise NotOnVariety(f"{x} is not on C{label} for {map_id.value}")
    if which == "bar":
        if label != BASE:
            raise NotOnBaseVariety(f"bar map is defined on C(1,1) only, got C{label}")
        return F0_BAR.apply(x) if map_id is MapId.F0 else dp3_bar(x)
    if which == "tilde":
        g = f0_tilde_map(a, b) if map_id is MapId.F0 else dp3_tilde_map(a, b)
        return g.apply(x)
    raise ValueError(f"unknown restricted map {which!r}; expected bar or tilde")
