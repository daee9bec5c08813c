"""Invariant varieties C, S and D, and the parameter map h."""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence, Union

from quivermaps.errors import ArityMismatch, NotInS
from quivermaps.maps.formulas import project_pi, psi
from quivermaps.maps.registry import arity_of, period_of, require_arity
from quivermaps.numeric.scalar import sqrt_exact
from quivermaps.schema import MapId, Point, VarietyC, VarietyD

ParamTuple = tuple[Fraction, Fraction, Fraction, Fraction]


def sheet_of(map_id: MapId, x: Point, anchor: Point) -> Optional[int]:
    """Least i in 0..m-1 with pi(x) = psi^i(anchor), or None."""
    target = project_pi(map_id, x)
    q = anchor
    for i in range(period_of(map_id)):
        if q == target:
            return i
        q = psi(map_id, q)
    return None


def classify_variety(map_id: MapId, x: Point, anchor: Point) -> int:
    i = sheet_of(map_id, x, anchor)
    if i is None:
        raise NotInS(f"{x} lies on no sheet of S{anchor} for {map_id.value}")
    return i


def membership_C(variety: VarietyC, x: Point) -> bool:
    if x.arity != arity_of(variety.map_id):
        return False
    return project_pi(variety.map_id, x) == variety.label


def d_parameters(z: Point) -> ParamTuple:
    """The unique (a, b, c, d) with z on D(a,b,c,d)."""
    require_arity(z, 6)
    z1, z2, z3, _z4, z5, _z6 = z.coords
    a, b = project_pi(MapId.DP3, z).coords
    return (a, b, z3 / z2, z1 * z5 / (z2 * z2))


def membership_D(params: VarietyD, z: Point) -> bool:
    require_arity(z, 6)
    a, b, c, d = params.as_tuple()
    z1, z2, z3, z4, z5, z6 = z.coords
    return (
        z4 == a * z3 * z5 / z2
        and z6 == b * (a + 1) / a * z2 * z5 / z1
        and z3 == c * z2
        and z1 * z5 == d * z2 * z2
    )


def membership_base_confined(z: Point, c: Fraction, d: Fraction) -> bool:
    """Codimension-4 variety carrying every DP3 orbit that starts on C(1,1)."""
    require_arity(z, 6)
    z1, z2, z3, z4, z5, z6 = z.coords
    return (
        z4 == z3 * z5 / z2
        and z6 == 2 * z2 * z5 / z1
        and z2 * z2 + z3 * z3 == c * z2 * z3
        and 2 * z2**4 + z1 * z1 * z5 * z5 == d * z1 * z2 * z2 * z5
    )


def h_map(q: Sequence) -> ParamTuple:
    if len(q) != 4:
        raise ArityMismatch(f"h acts on 4-tuples, got {len(q)}")
    alpha, beta, gamma, delta = (Fraction(v) for v in q)
    if min(alpha, beta, gamma, delta) <= 0:
        raise ValueError("h needs positive parameters")
    return (beta, beta / alpha, 1 / (alpha * gamma), (alpha + 1) / (alpha * alpha * delta))


def _require_free(free: Sequence, count: int, what: str) -> list[Fraction]:
    if len(free) != count:
        raise ArityMismatch(f"{what} takes {count} free parameters, got {len(free)}")
    values = [Fraction(v) for v in free]
    if min(values) <= 0:
        raise ValueError(f"{what} free parameters must be positive")
    return values


def sample_variety(map_id: MapId, variety: Union[VarietyC, VarietyD], free: Sequence) -> Point:
    """Point on the variety built from its free coordinates."""
    if isinstance(variety, VarietyD):
        if map_id is not MapId.DP3:
            raise ArityMismatch("D varieties live in the DP3 phase space")
        z1, z2 = _require_free(free, 2, "D variety")
        a, b, c, d = variety.as_tuple()
        z3 = c * z2
        z5 = d * z2 * z2 / z1
        return Point.of(z1, z2, z3, a * z3 * z5 / z2, z5, b * (a + 1) / a * z2 * z5 / z1)

    if variety.map_id is not map_id:
        raise ArityMismatch(f"C variety of {variety.map_id.value} sampled as {map_id.value}")
    a, b = variety.a, variety.b
    if map_id is MapId.F0:
        x1, x2 = _require_free(free, 2, "F0 C variety")
        ratio = sqrt_exact(a / b)
        geo = sqrt_exact(a * b)
        x3 = ratio * x2
        return Point.of(x1, x2, x3, (x2 * x2 + x3 * x3) / (geo * x1))
    x1, x2, x3, x5 = _require_free(free, 4, "DP3 C variety")
    return Point.of(x1, x2, x3, a * x3 * x5 / x2, x5, b * (a + 1) / a * x2 * x5 / x1)
