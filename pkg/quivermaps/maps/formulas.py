"""Point-level maps: phi, the reduced maps, psi and the (semi)conjugacies."""

from __future__ import annotations

import logging
from functools import partial
from typing import Callable

from quivermaps.errors import NotPerfectSquare
from quivermaps.maps.planar import planar_formula
from quivermaps.maps.registry import MAP_PROFILES, arity_of, require_arity, resolve_which
from quivermaps.numeric.scalar import sqrt_exact
from quivermaps.schema import MapId, Point

logger = logging.getLogger(__name__)

PointMap = Callable[[Point], Point]


def _f0_phi(x: Point) -> Point:
    x1, x2, x3, x4 = x.coords
    s = x2 * x2 + x3 * x3
    return Point.of(x3, x4, s / x1, (x1 * x1 * x4 * x4 + s * s) / (x1 * x1 * x2))


def _dp3_phi(x: Point) -> Point:
    x1, x2, x3, x4, x5, x6 = x.coords
    return Point.of(
        x3,
        x4,
        x5,
        x6,
        (x2 * x4 + x3 * x5) / x1,
        (x1 * x4 * x6 + x2 * x4 * x5 + x3 * x5 * x5) / (x1 * x2),
    )


def phi(map_id: MapId, x: Point) -> Point:
    require_arity(x, arity_of(map_id))
    if map_id is MapId.F0:
        return _f0_phi(x)
    return _dp3_phi(x)


def _planar(map_id: MapId, which: str, p: Point) -> Point:
    require_arity(p, 2)
    return Point.of(*planar_formula(map_id, which)(p[0], p[1]))


def phi_hat(map_id: MapId, p: Point) -> Point:
    return _planar(map_id, "phi_hat", p)


def psi(map_id: MapId, p: Point) -> Point:
    return _planar(map_id, "psi", p)


def conj_Pi_tilde(map_id: MapId, p: Point) -> Point:
    return _planar(map_id, "pi_tilde", p)


def conj_Pi_tilde_inv(map_id: MapId, p: Point) -> Point:
    """Inverse of conj_Pi_tilde. F0 needs x/y to be a rational square."""
    require_arity(p, 2)
    x, y = p.coords
    if map_id is MapId.DP3:
        return Point.of(x, (1 + x) * y)
    try:
        root = sqrt_exact(x / y)
    except NotPerfectSquare:
        logger.debug("conj_Pi_tilde_inv leaves Q: point=%s", p)
        raise
    return Point.of((x + y) / (y * y) / root, root)


def project_Pi(map_id: MapId, x: Point) -> Point:
    require_arity(x, arity_of(map_id))
    if map_id is MapId.F0:
        x1, x2, x3, x4 = x.coords
        return Point.of(x1 * x4 / (x2 * x2), x3 / x2)
    x1, x2, x3, x4, x5, x6 = x.coords
    return Point.of(x2 * x4 / (x3 * x5), x1 * x4 * x6 / (x3 * x5 * x5))


def project_pi(map_id: MapId, x: Point) -> Point:
    """Direct display of pi; equals conj_Pi_tilde(project_Pi(x))."""
    require_arity(x, arity_of(map_id))
    if map_id is MapId.F0:
        x1, x2, x3, x4 = x.coords
        s = x2 * x2 + x3 * x3
        return Point.of(x3 * s / (x1 * x2 * x4), x2 * s / (x1 * x3 * x4))
    x1, x2, x3, x4, x5, x6 = x.coords
    return Point.of(x2 * x4 / (x3 * x5), x1 * x4 * x6 / (x5 * (x2 * x4 + x3 * x5)))


def project_pi_composed(map_id: MapId, x: Point) -> Point:
    return conj_Pi_tilde(map_id, project_Pi(map_id, x))


def iterate_map(f: PointMap, p: Point, n: int) -> Point:
    if n < 0:
        raise ValueError(f"iteration count must be >= 0, got {n}")
    for _ in range(n):
        p = f(p)
    return p


_POINT_MAPS = {
    "phi": phi,
    "phi_hat": phi_hat,
    "psi": psi,
}


def get_map(map_id: MapId, which: str) -> PointMap:
    """Single-argument map for `which` in {phi, phihat, phi_hat, psi}."""
    return partial(_POINT_MAPS[resolve_which(which)], map_id)


def fixed_points(map_id: MapId) -> dict[str, Point]:
    profile = MAP_PROFILES[map_id]
    return {
        "psi": Point.of(*profile["psi_fixed_point"]),
        "phi_hat": Point.of(*profile["phi_hat_fixed_point"]),
    }
