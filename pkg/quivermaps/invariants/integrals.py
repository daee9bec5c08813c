"""First integrals of psi, their lifts through pi, and the restricted DP3 integrals."""

from __future__ import annotations

from fractions import Fraction

from quivermaps.maps.formulas import project_pi
from quivermaps.maps.registry import arity_of, require_arity
from quivermaps.numeric.jet import jacobian_det
from quivermaps.schema import IntegralValues, MapId, Point


# Planar integrals over bare (x, y); they also evaluate on Jet2.

def f0_i1(x, y):
    return x + y + 1 / x + 1 / y


def f0_i2(x, y):
    return x * y + 1 / (x * y) + x / y + y / x


def dp3_i1(x, y):
    return x + y + 1 / x + 1 / y + y / x + x / y


def dp3_i2(x, y):
    return x * x + y * y + 1 / (x * x) + 1 / (y * y) + (x * x) / (y * y) + (y * y) / (x * x)


INTEGRAL_FORMULAS = {
    MapId.F0: (f0_i1, f0_i2),
    MapId.DP3: (dp3_i1, dp3_i2),
}


def integral_formula(map_id: MapId):
    """Pair (I1, I2) of planar callables for the psi of `map_id`."""
    return INTEGRAL_FORMULAS[map_id]


def integrals_psi(map_id: MapId, p: Point) -> IntegralValues:
    require_arity(p, 2)
    i1, i2 = integral_formula(map_id)
    x, y = p.coords
    return IntegralValues(j1=i1(x, y), j2=i2(x, y))


def lifted_integrals_via_pi(map_id: MapId, x: Point) -> IntegralValues:
    return integrals_psi(map_id, project_pi(map_id, x))


def lifted_integrals(map_id: MapId, x: Point) -> IntegralValues:
    """J_k = I_k o pi. F0 uses the expanded display in x1..x4."""
    require_arity(x, arity_of(map_id))
    if map_id is MapId.DP3:
        return lifted_integrals_via_pi(map_id, x)
    x1, x2, x3, x4 = x.coords
    s = x2 * x2 + x3 * x3
    t = x1 * x4
    j1 = (t * t + s * s) / (x1 * x2 * x3 * x4)
    j2 = (t * t) / (s * s) + (s * s) / (t * t) + (x3 * x3) / (x2 * x2) + (x2 * x2) / (x3 * x3)
    return IntegralValues(j1=j1, j2=j2)


def restricted_integrals_dp3(which: str, x: Point) -> IntegralValues:
    """Integrals of phi on C(1,1) ("bar") and of phi^6 on C(a,b) ("tilde")."""
    require_arity(x, 6)
    x1, x2, x3, _x4, x5, _x6 = x.coords
    if which == "bar":
        return IntegralValues(
            j1=x2 / x3 + x3 / x2,
            j2=2 * x2 * x2 / (x1 * x5) + x1 * x5 / (x2 * x2),
        )
    if which == "tilde":
        return IntegralValues(j1=x3 / x2, j2=x1 * x5 / (x2 * x2))
    raise ValueError(f"unknown restricted integrals {which!r}; expected bar or tilde")


def jacobian_det_I(p: Point) -> Fraction:
    """det Jac(I1, I2) for the F0 integrals, in factored form."""
    require_arity(p, 2)
    x, y = p.coords
    return (x - y) * (x * y - 1) * (x * x - 1) * (y * y - 1) / (x**3 * y**3)


def integral_jacobian(map_id: MapId, p: Point) -> Fraction:
    """det Jac(I1, I2) from forward-mode jets."""
    i1, i2 = integral_formula(map_id)
    return jacobian_det(lambda x, y: (i1(x, y), i2(x, y)), p)
