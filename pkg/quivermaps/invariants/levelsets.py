"""
Common level sets of the psi integrals.

For F0 the level set through P = (a, b) is the octet
O_psi(P) u O_psi(sigma(P)); it collapses to a single psi orbit exactly when
the integrals' Jacobian vanishes at P. DP3 is handled by the same orbit
union and checked against its own Jacobian.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from fractions import Fraction

from quivermaps.invariants.integrals import (
    integral_formula,
    integral_jacobian,
    integrals_psi,
    jacobian_det_I,
)
from quivermaps.maps.formulas import psi
from quivermaps.maps.registry import period_of, require_arity
from quivermaps.schema import LevelSetReport, MapId, Point

logger = logging.getLogger(__name__)


def sigma(p: Point) -> Point:
    require_arity(p, 2)
    return Point.of(p[1], p[0])


def psi_orbit(map_id: MapId, p: Point) -> list[Point]:
    """Distinct psi iterates of p in order of appearance."""
    orbit = [p]
    q = psi(map_id, p)
    while q != p and len(orbit) < period_of(map_id):
        orbit.append(q)
        q = psi(map_id, q)
    return orbit


def level_set_octet(a, b) -> frozenset[Point]:
    a, b = Fraction(a), Fraction(b)
    ia, ib = 1 / a, 1 / b
    return frozenset(
        Point.of(*pair)
        for pair in (
            (a, b), (b, ia), (ia, ib), (ib, a),
            (b, a), (a, ib), (ib, ia), (ia, b),
        )
    )


def level_set(map_id: MapId, a, b) -> frozenset[Point]:
    anchor = Point.of(a, b)
    return frozenset(psi_orbit(map_id, anchor)) | frozenset(psi_orbit(map_id, sigma(anchor)))


def level_equations(a, b, u, v) -> tuple[Fraction, Fraction]:
    """Residuals of the polynomial system equating the F0 integrals at (u,v) and (a,b)."""
    a, b, u, v = (Fraction(t) for t in (a, b, u, v))
    c1 = a + b + 1 / a + 1 / b
    c2 = a * b + 1 / (a * b) + a / b + b / a
    r1 = u * u * v + u * v * v + u + v - c1 * u * v
    r2 = u * u * v * v + u * u + v * v + 1 - c2 * u * v
    return (r1, r2)


def _candidates(height: int) -> list[Fraction]:
    return sorted({Fraction(p, q) for p in range(1, height + 1) for q in range(1, height + 1)})


def brute_force_level_solutions(a, b, height: int, map_id: MapId = MapId.F0) -> frozenset[Point]:
    """All (u, v) of height <= `height` on the level set through (a, b)."""
    a, b = Fraction(a), Fraction(b)
    values = _candidates(height)
    found = set()
    if map_id is MapId.F0:
        # I1 = f(u) + f(v) with f(t) = t + 1/t
        by_f = defaultdict(list)
        for t in values:
            by_f[t + 1 / t].append(t)
        c1 = a + b + 1 / a + 1 / b
        for u in values:
            for v in by_f.get(c1 - (u + 1 / u), ()):
                if level_equations(a, b, u, v) == (0, 0):
                    found.add(Point.of(u, v))
        return frozenset(found)

    i1, i2 = integral_formula(map_id)
    target = (i1(a, b), i2(a, b))
    for u in values:
        for v in values:
            if i1(u, v) == target[0] and i2(u, v) == target[1]:
                found.add(Point.of(u, v))
    return frozenset(found)


def _jacobian_at(map_id: MapId, anchor: Point) -> Fraction:
    if map_id is MapId.F0:
        return jacobian_det_I(anchor)
    return integral_jacobian(map_id, anchor)


def level_set_report(map_id: MapId, a, b) -> LevelSetReport:
    anchor = Point.of(a, b)
    reflected = sigma(anchor)
    orbit_anchor = psi_orbit(map_id, anchor)
    orbit_reflected = psi_orbit(map_id, reflected)
    points = sorted(set(orbit_anchor) | set(orbit_reflected), key=lambda p: p.coords)
    jac = _jacobian_at(map_id, anchor)
    single_orbit = reflected in orbit_anchor
    level = integrals_psi(map_id, anchor)
    same_level = all(integrals_psi(map_id, p) == level for p in points)
    consistent = same_level and ((jac == 0) == single_orbit)
    if not consistent:
        logger.warning(
            "level set dichotomy violated: map=%s anchor=%s jacobian=%s single_orbit=%s",
            map_id.value, anchor, jac, single_orbit,
        )
    return LevelSetReport(
        map_id=map_id,
        anchor=anchor,
        points=points,
        orbit_anchor=orbit_anchor,
        orbit_reflected=orbit_reflected,
        jacobian=jac,
        case="i" if jac == 0 else "ii",
        consistent=consistent,
    )
